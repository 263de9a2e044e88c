use std::fmt;

/// A permutation of the arguments `a, b, c`, stored as the arrangement
/// `(σ(a), σ(b), σ(c))` with letters encoded as 0, 1, 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm3([u8; 3]);

/// The six permutations in lex order: abc, acb, bac, bca, cab, cba.
pub const PERMS: [Perm3; 6] = [
    Perm3([0, 1, 2]),
    Perm3([0, 2, 1]),
    Perm3([1, 0, 2]),
    Perm3([1, 2, 0]),
    Perm3([2, 0, 1]),
    Perm3([2, 1, 0]),
];

pub const LETTERS: [char; 3] = ['a', 'b', 'c'];

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    /// Builds from an arrangement; `None` unless it is a bijection of {0,1,2}.
    pub fn new(arrangement: [u8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &x in &arrangement {
            if x > 2 || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm3(arrangement))
    }

    pub fn all() -> impl Iterator<Item = Perm3> {
        PERMS.into_iter()
    }

    pub fn from_index(i: usize) -> Perm3 {
        PERMS[i]
    }

    /// Position in lex order, 0..6.
    pub fn index(self) -> usize {
        PERMS.iter().position(|&p| p == self).expect("valid permutation")
    }

    pub fn arrangement(self) -> [u8; 3] {
        self.0
    }

    /// Image of a letter under the substitution.
    pub fn apply(self, letter: u8) -> u8 {
        self.0[letter as usize]
    }

    /// `self ∘ other`: substitute by `other` first, then by `self`.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([self.apply(other.0[0]), self.apply(other.0[1]), self.apply(other.0[2])])
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm3(inv)
    }

    /// +1 for even permutations, −1 for odd.
    pub fn sign(self) -> i64 {
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn parse(s: &str) -> Option<Perm3> {
        let bytes = s.as_bytes();
        if bytes.len() != 3 {
            return None;
        }
        let mut arr = [0u8; 3];
        for (i, b) in bytes.iter().enumerate() {
            arr[i] = match b {
                b'a' => 0,
                b'b' => 1,
                b'c' => 2,
                _ => return None,
            };
        }
        Perm3::new(arr)
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{}", LETTERS[x as usize])?;
        }
        Ok(())
    }
}
