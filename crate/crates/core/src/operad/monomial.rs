//! Ordered monomial bases of the arity-3 spaces and the S3 action on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::{Perm3, LETTERS};
use crate::error::{Error, Result};

/// One of the fixed arity-3 spaces, each with an ordered basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Space {
    /// One operation, nonsymmetric: `(ab)c`, `a(bc)`.
    O1,
    /// Two operations `<`, `>`, nonsymmetric: the eight association types.
    O2,
    /// One operation with all argument orders, type-major (12).
    #[serde(rename = "SO1_PLAIN")]
    So1Plain,
    /// Lie bracket and Jordan product, inner pair sorted (12).
    #[serde(rename = "SO1_POLAR")]
    So1Polar,
    /// Two operations with all argument orders, type-major (48).
    #[serde(rename = "SO2")]
    So2,
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::O1 => 2,
            Space::O2 => 8,
            Space::So1Plain | Space::So1Polar => 12,
            Space::So2 => 48,
        }
    }

    pub fn is_symmetric(self) -> bool {
        !matches!(self, Space::O1 | Space::O2)
    }

    pub fn type_count(self) -> usize {
        match self {
            Space::O1 | Space::So1Plain => 2,
            Space::O2 | Space::So2 => 8,
            Space::So1Polar => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::O1 => "O1",
            Space::O2 => "O2",
            Space::So1Plain => "SO1_PLAIN",
            Space::So1Polar => "SO1_POLAR",
            Space::So2 => "SO2",
        }
    }

    pub fn basis(self) -> impl Iterator<Item = Monomial> {
        (0..self.dim()).map(move |i| Monomial::from_index(self, i))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "O1" => Space::O1,
            "O2" => Space::O2,
            "SO1_PLAIN" => Space::So1Plain,
            "SO1_POLAR" => Space::So1Polar,
            "SO2" => Space::So2,
            _ => return Err(Error::Format(format!("unknown space {s:?}"))),
        })
    }
}

/// Binary operation labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Op {
    /// The single operation of `O1`, written by juxtaposition.
    Plain,
    /// `≺`, written `<`.
    Left,
    /// `≻`, written `>`.
    Right,
    /// Lie bracket `[x,y]`.
    Lie,
    /// Jordan product `x o y`.
    Jordan,
}

/// A binary tree with three leaves.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Tree {
    Leaf(u8),
    Node(Op, Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(op: Op, l: Tree, r: Tree) -> Tree {
        Tree::Node(op, Box::new(l), Box::new(r))
    }

    fn leaves(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(x) => out.push(*x),
            Tree::Node(_, l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
        }
    }
}

/// A basis monomial: association type plus the argument arrangement.
///
/// For `O1`/`O2` the arrangement is always `abc`. For `SO1_POLAR` it is the
/// canonical arrangement with the inner pair in lex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub space: Space,
    pub ty: usize,
    pub args: Perm3,
}

/// A monomial with a ±1 sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedMonomial {
    pub sign: i64,
    pub monomial: Monomial,
}

/// Polarized types: inner Lie bracket?
fn polar_inner_lie(ty: usize) -> bool {
    ty == 0 || ty == 2
}

/// Polarized types: outer Lie bracket?
fn polar_outer_lie(ty: usize) -> bool {
    ty == 0 || ty == 1
}

impl Monomial {
    pub fn new(space: Space, ty: usize, args: Perm3) -> Result<Self> {
        if ty >= space.type_count() {
            return Err(Error::Format(format!("type {} out of range for {space}", ty + 1)));
        }
        if !space.is_symmetric() && args != Perm3::IDENTITY {
            return Err(Error::NoSymmetricAction(space.name()));
        }
        if space == Space::So1Polar && args.arrangement()[0] > args.arrangement()[1] {
            return Err(Error::Format(format!("{args} is not a canonical polarized arrangement")));
        }
        Ok(Monomial { space, ty, args })
    }

    /// Position in the ordered basis of its space.
    pub fn index(&self) -> usize {
        match self.space {
            Space::O1 | Space::O2 => self.ty,
            Space::So1Plain | Space::So2 => self.ty * 6 + self.args.index(),
            Space::So1Polar => self.ty * 3 + (2 - self.args.arrangement()[2] as usize),
        }
    }

    pub fn from_index(space: Space, i: usize) -> Monomial {
        assert!(i < space.dim(), "index {i} outside {space}");
        match space {
            Space::O1 | Space::O2 => Monomial { space, ty: i, args: Perm3::IDENTITY },
            Space::So1Plain | Space::So2 => {
                Monomial { space, ty: i / 6, args: Perm3::from_index(i % 6) }
            }
            Space::So1Polar => {
                let outer = 2 - (i % 3) as u8;
                let mut pair = [0u8, 1, 2].into_iter().filter(|&x| x != outer);
                let (x, y) = (pair.next().unwrap(), pair.next().unwrap());
                Monomial { space, ty: i / 3, args: Perm3::new([x, y, outer]).unwrap() }
            }
        }
    }

    /// Operation labels `(inner, outer)` and whether the tree is left-nested.
    fn shape(&self) -> (Op, Op, bool) {
        match self.space {
            Space::O1 | Space::So1Plain => (Op::Plain, Op::Plain, self.ty == 0),
            Space::O2 | Space::So2 => {
                let lr = |bit: usize| if bit == 0 { Op::Left } else { Op::Right };
                if self.ty < 4 {
                    (lr((self.ty >> 1) & 1), lr(self.ty & 1), true)
                } else {
                    let t = self.ty - 4;
                    (lr(t & 1), lr((t >> 1) & 1), false)
                }
            }
            Space::So1Polar => {
                let lj = |lie: bool| if lie { Op::Lie } else { Op::Jordan };
                (lj(polar_inner_lie(self.ty)), lj(polar_outer_lie(self.ty)), true)
            }
        }
    }

    pub fn to_tree(&self) -> Tree {
        let [x, y, z] = self.args.arrangement();
        let (inner, outer, left_nested) = self.shape();
        if left_nested {
            Tree::node(outer, Tree::node(inner, Tree::Leaf(x), Tree::Leaf(y)), Tree::Leaf(z))
        } else {
            Tree::node(outer, Tree::Leaf(x), Tree::node(inner, Tree::Leaf(y), Tree::Leaf(z)))
        }
    }

    /// Identifies a tree as a basis monomial of `space`, normalizing by
    /// (anti)commutativity for the polarized space.
    pub fn from_tree(space: Space, tree: &Tree) -> Result<SignedMonomial> {
        let mut leaves = Vec::new();
        tree.leaves(&mut leaves);
        if leaves.len() != 3 {
            return Err(Error::MalformedTree(format!("{} leaves", leaves.len())));
        }
        let args = Perm3::new([leaves[0], leaves[1], leaves[2]])
            .ok_or_else(|| Error::MalformedTree("arguments must be a, b, c once each".into()))?;
        if space == Space::So1Polar {
            return canonicalize_polar(tree);
        }
        let Tree::Node(outer, l, r) = tree else {
            return Err(Error::MalformedTree("leaf at root".into()));
        };
        let (inner, left_nested) = match (&**l, &**r) {
            (Tree::Node(op, _, _), Tree::Leaf(_)) => (*op, true),
            (Tree::Leaf(_), Tree::Node(op, _, _)) => (*op, false),
            _ => return Err(Error::MalformedTree("not an arity-3 tree".into())),
        };
        let ty = match space {
            Space::O1 | Space::So1Plain => {
                if inner != Op::Plain || *outer != Op::Plain {
                    return Err(Error::MalformedTree(format!("{space} uses juxtaposition only")));
                }
                usize::from(!left_nested)
            }
            Space::O2 | Space::So2 => {
                let bit = |op: Op| match op {
                    Op::Left => Ok(0),
                    Op::Right => Ok(1),
                    _ => Err(Error::MalformedTree(format!("{space} uses < and > only"))),
                };
                let (i, o) = (bit(inner)?, bit(*outer)?);
                if left_nested {
                    (i << 1) | o
                } else {
                    4 + ((o << 1) | i)
                }
            }
            Space::So1Polar => unreachable!(),
        };
        let m = Monomial::new(space, ty, args)?;
        Ok(SignedMonomial { sign: 1, monomial: m })
    }

    /// Substitutes the arguments by `sigma` and renormalizes.
    pub fn act(&self, sigma: Perm3) -> Result<SignedMonomial> {
        perm_act(sigma, self)
    }

    pub fn render(&self, opts: RenderOptions) -> String {
        let t = self.to_tree();
        match self.space {
            Space::O2 | Space::So2 => format!("({})", render_tree(&t, opts)),
            _ => render_tree(&t, opts),
        }
    }
}

/// Substitutes the arguments of `m` by `sigma`, then renormalizes into the
/// canonical basis. Only the polarized space can produce a sign.
pub fn perm_act(sigma: Perm3, m: &Monomial) -> Result<SignedMonomial> {
    if !m.space.is_symmetric() {
        return Err(Error::NoSymmetricAction(m.space.name()));
    }
    let moved = sigma.compose(m.args);
    if m.space != Space::So1Polar {
        return Ok(SignedMonomial { sign: 1, monomial: Monomial { args: moved, ..*m } });
    }
    let [x, y, z] = moved.arrangement();
    let (args, sign) = if x > y {
        (Perm3::new([y, x, z]).unwrap(), if polar_inner_lie(m.ty) { -1 } else { 1 })
    } else {
        (moved, 1)
    };
    Ok(SignedMonomial { sign, monomial: Monomial { args, ..*m } })
}

/// Normalizes a polarized tree: the outer product is flipped to put the
/// compound argument first, then the inner pair is sorted. Each swap of a
/// Lie bracket contributes a factor −1.
pub fn canonicalize_polar(tree: &Tree) -> Result<SignedMonomial> {
    let Tree::Node(outer, l, r) = tree else {
        return Err(Error::MalformedTree("leaf at root".into()));
    };
    let is_polar = |op: &Op| matches!(op, Op::Lie | Op::Jordan);
    if !is_polar(outer) {
        return Err(Error::MalformedTree("polarized trees use [,] and o only".into()));
    }
    let mut sign = 1;
    let (compound, single) = match (&**l, &**r) {
        (Tree::Node(..), Tree::Leaf(z)) => (&**l, *z),
        (Tree::Leaf(z), Tree::Node(..)) => {
            if *outer == Op::Lie {
                sign = -sign;
            }
            (&**r, *z)
        }
        _ => return Err(Error::MalformedTree("not an arity-3 tree".into())),
    };
    let Tree::Node(inner, il, ir) = compound else { unreachable!() };
    if !is_polar(inner) {
        return Err(Error::MalformedTree("polarized trees use [,] and o only".into()));
    }
    let (Tree::Leaf(mut x), Tree::Leaf(mut y)) = (&**il, &**ir) else {
        return Err(Error::MalformedTree("not an arity-3 tree".into()));
    };
    if x > y {
        std::mem::swap(&mut x, &mut y);
        if *inner == Op::Lie {
            sign = -sign;
        }
    }
    let args = Perm3::new([x, y, single])
        .ok_or_else(|| Error::MalformedTree("arguments must be a, b, c once each".into()))?;
    let ty = match (*inner == Op::Lie, *outer == Op::Lie) {
        (true, true) => 0,
        (false, true) => 1,
        (true, false) => 2,
        (false, false) => 3,
    };
    Ok(SignedMonomial { sign, monomial: Monomial { space: Space::So1Polar, ty, args } })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Use `≺`, `≻`, `∘` instead of `<`, `>`, `o`.
    pub unicode: bool,
}

fn render_tree(t: &Tree, opts: RenderOptions) -> String {
    match t {
        Tree::Leaf(x) => LETTERS[*x as usize].to_string(),
        Tree::Node(op, l, r) => {
            let sub = |c: &Tree| {
                let s = render_tree(c, opts);
                match (c, op) {
                    (Tree::Leaf(_), _) | (_, Op::Lie) => s,
                    (Tree::Node(Op::Lie, _, _), _) => s,
                    _ => format!("({s})"),
                }
            };
            let (l, r) = (sub(l), sub(r));
            match op {
                Op::Plain => format!("{l}{r}"),
                Op::Left => format!("{l}{}{r}", if opts.unicode { "≺" } else { "<" }),
                Op::Right => format!("{l}{}{r}", if opts.unicode { "≻" } else { ">" }),
                Op::Lie => format!("[{l},{r}]"),
                Op::Jordan => format!("{l} {} {r}", if opts.unicode { "∘" } else { "o" }),
            }
        }
    }
}

/// Parses a monomial written in any of the rendered notations:
/// `((a<b)>c)`, `a(bc)`, `[a o b,c]`, `[a,b] o c`, with `≺ ≻ ∘` accepted.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let t = parse_expr(&chars, &mut pos, 0)?;
    if pos != chars.len() {
        return Err(Error::MalformedTree(format!("trailing input in {text:?}")));
    }
    Ok(t)
}

const MAX_DEPTH: usize = 8;

fn parse_expr(c: &[char], pos: &mut usize, depth: usize) -> Result<Tree> {
    if depth > MAX_DEPTH {
        return Err(Error::MalformedTree("nesting too deep".into()));
    }
    let lhs = parse_operand(c, pos, depth)?;
    let op = match c.get(*pos) {
        Some('<' | '≺') => Op::Left,
        Some('>' | '≻') => Op::Right,
        Some('o' | '∘') => Op::Jordan,
        Some('a' | 'b' | 'c' | '(' | '[') => {
            let rhs = parse_operand(c, pos, depth)?;
            return Ok(Tree::node(Op::Plain, lhs, rhs));
        }
        _ => return Ok(lhs),
    };
    *pos += 1;
    let rhs = parse_operand(c, pos, depth)?;
    Ok(Tree::node(op, lhs, rhs))
}

fn parse_operand(c: &[char], pos: &mut usize, depth: usize) -> Result<Tree> {
    match c.get(*pos) {
        Some(&ch @ ('a' | 'b' | 'c')) => {
            *pos += 1;
            Ok(Tree::Leaf(ch as u8 - b'a'))
        }
        Some('(') => {
            *pos += 1;
            let t = parse_expr(c, pos, depth + 1)?;
            if c.get(*pos) != Some(&')') {
                return Err(Error::MalformedTree("expected ')'".into()));
            }
            *pos += 1;
            Ok(t)
        }
        Some('[') => {
            *pos += 1;
            let l = parse_expr(c, pos, depth + 1)?;
            if c.get(*pos) != Some(&',') {
                return Err(Error::MalformedTree("expected ','".into()));
            }
            *pos += 1;
            let r = parse_expr(c, pos, depth + 1)?;
            if c.get(*pos) != Some(&']') {
                return Err(Error::MalformedTree("expected ']'".into()));
            }
            *pos += 1;
            Ok(Tree::node(Op::Lie, l, r))
        }
        other => Err(Error::MalformedTree(format!("unexpected {other:?}"))),
    }
}
