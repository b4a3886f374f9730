//! Variable spaces: which variable families a polynomial may use.

use std::fmt;

use crate::error::AlgebraError;

/// A family of variables. Spatial families carry `n` members, `T` and `W`
/// exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
    Z,
    ZBar,
    T,
    W,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::X,
        Family::Y,
        Family::Z,
        Family::ZBar,
        Family::T,
        Family::W,
    ];

    fn bit(self) -> u8 {
        match self {
            Family::X => 1,
            Family::Y => 2,
            Family::Z => 4,
            Family::ZBar => 8,
            Family::T => 16,
            Family::W => 32,
        }
    }

    pub fn is_spatial(self) -> bool {
        !matches!(self, Family::T | Family::W)
    }

    fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::ZBar => "zb",
            Family::T => "t",
            Family::W => "w",
        }
    }
}

/// A single variable. Spatial indices are 1-based, matching the text form
/// (`x1`, `zb2`, ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    Z(usize),
    ZBar(usize),
    T,
    W,
}

impl Var {
    pub fn family(self) -> Family {
        match self {
            Var::X(_) => Family::X,
            Var::Y(_) => Family::Y,
            Var::Z(_) => Family::Z,
            Var::ZBar(_) => Family::ZBar,
            Var::T => Family::T,
            Var::W => Family::W,
        }
    }

    /// 1-based index for spatial variables, 0 for `t` and `w`.
    pub fn index(self) -> usize {
        match self {
            Var::X(k) | Var::Y(k) | Var::Z(k) | Var::ZBar(k) => k,
            Var::T | Var::W => 0,
        }
    }

    pub fn spatial(family: Family, k: usize) -> Var {
        match family {
            Family::X => Var::X(k),
            Family::Y => Var::Y(k),
            Family::Z => Var::Z(k),
            Family::ZBar => Var::ZBar(k),
            Family::T => Var::T,
            Family::W => Var::W,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = self.family();
        if fam.is_spatial() {
            write!(f, "{}{}", fam.prefix(), self.index())
        } else {
            f.write_str(fam.prefix())
        }
    }
}

/// Declares the ambient dimension `n` and the variable families in use.
/// `t` is always present.
///
/// Exponent vectors share one layout for every space of a given `n`:
/// `[w, t, x1..xn, y1..yn, z1..zn, zb1..zbn]`. A space only restricts which
/// slots may be nonzero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarSpace {
    n: usize,
    families: u8,
}

impl VarSpace {
    pub fn new(n: usize, families: &[Family]) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::InvalidSpace(
                "dimension n must be positive".into(),
            ));
        }
        let mut bits = Family::T.bit();
        for f in families {
            bits |= f.bit();
        }
        Ok(Self { n, families: bits })
    }

    fn of(n: usize, families: &[Family]) -> Self {
        Self::new(n, families).expect("n >= 1")
    }

    /// `{z, t}`: annihilators of a complex function.
    pub fn complex(n: usize) -> Self {
        Self::of(n, &[Family::Z, Family::T])
    }

    /// `{x, y, t}`: annihilators of real or imaginary parts.
    pub fn real(n: usize) -> Self {
        Self::of(n, &[Family::X, Family::Y, Family::T])
    }

    /// `{z, zb, t}`: the domain of the φ isomorphism.
    pub fn conjugate_pair(n: usize) -> Self {
        Self::of(n, &[Family::Z, Family::ZBar, Family::T])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has(&self, family: Family) -> bool {
        self.families & family.bit() != 0
    }

    pub fn families(&self) -> impl Iterator<Item = Family> + '_ {
        Family::ALL.into_iter().filter(|f| self.has(*f))
    }

    pub fn with(&self, family: Family) -> Self {
        Self {
            n: self.n,
            families: self.families | family.bit(),
        }
    }

    pub fn without(&self, family: Family) -> Self {
        if family == Family::T {
            return *self;
        }
        Self {
            n: self.n,
            families: self.families & !family.bit(),
        }
    }

    /// Smallest space containing both, if the dimensions agree.
    pub fn union(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::SpaceMismatch(*self, *other));
        }
        Ok(Self {
            n: self.n,
            families: self.families | other.families,
        })
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        self.n == other.n && (self.families & other.families) == other.families
    }

    pub fn contains(&self, v: Var) -> bool {
        let fam = v.family();
        if !self.has(fam) {
            return false;
        }
        !fam.is_spatial() || (1..=self.n).contains(&v.index())
    }

    /// Number of exponent slots in the shared layout.
    pub fn slots(&self) -> usize {
        2 + 4 * self.n
    }

    pub fn slot(&self, v: Var) -> usize {
        match v {
            Var::W => 0,
            Var::T => 1,
            Var::X(k) => 1 + k,
            Var::Y(k) => 1 + self.n + k,
            Var::Z(k) => 1 + 2 * self.n + k,
            Var::ZBar(k) => 1 + 3 * self.n + k,
        }
    }

    pub fn var_at(&self, slot: usize) -> Var {
        match slot {
            0 => Var::W,
            1 => Var::T,
            s => {
                let s = s - 2;
                let k = s % self.n + 1;
                match s / self.n {
                    0 => Var::X(k),
                    1 => Var::Y(k),
                    2 => Var::Z(k),
                    _ => Var::ZBar(k),
                }
            }
        }
    }

    /// All variables declared by this space, in slot order.
    pub fn vars(&self) -> Vec<Var> {
        (0..self.slots())
            .map(|s| self.var_at(s))
            .filter(|v| self.contains(*v))
            .collect()
    }

    pub fn spatial_vars(&self, family: Family) -> Vec<Var> {
        if !self.has(family) || !family.is_spatial() {
            return Vec::new();
        }
        (1..=self.n).map(|k| Var::spatial(family, k)).collect()
    }
}

impl fmt::Debug for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.families().map(|fam| fam.prefix()).collect();
        write!(f, "{{{}}}^n={}", names.join(","), self.n)
    }
}
