//! Finite abelian groups in invariant-factor form.
//!
//! A group is a chain d1 | d2 | ... | dm with di >= 2 (empty chain = trivial
//! group). Elements are integer tuples reduced mod the invariant factors, so
//! the canonical form is unique and equality is literal. Cokernels, subgroups
//! and quotients are all driven by Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{lattice_basis, snf, IntMatrix, RatMatrix};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAbGroup {
    factors: Vec<BigInt>,
}

pub type AbElem = Vec<BigInt>;

impl FiniteAbGroup {
    pub fn trivial() -> Self {
        FiniteAbGroup { factors: vec![] }
    }

    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        assert!(n >= BigInt::one());
        if n.is_one() {
            Self::trivial()
        } else {
            FiniteAbGroup { factors: vec![n] }
        }
    }

    /// Build from an invariant-factor chain; rejects entries < 2 and chains
    /// without divisibility.
    pub fn new(factors: Vec<BigInt>) -> Result<Self> {
        for f in &factors {
            if *f < BigInt::from(2) {
                return Err(Error::ElementShape(format!("invariant factor {f} < 2")));
            }
        }
        for w in factors.windows(2) {
            if !w[1].mod_floor(&w[0]).is_zero() {
                return Err(Error::ElementShape(format!(
                    "invariant factor {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(FiniteAbGroup { factors })
    }

    /// Canonicalise an arbitrary list of cyclic orders (>= 1) into
    /// invariant-factor form, returning the group together with the images
    /// of the original cyclic generators.
    pub fn from_orders(orders: &[BigInt]) -> (Self, Vec<AbElem>) {
        let n = orders.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, c) in orders.iter().enumerate() {
            assert!(c >= &BigInt::one());
            diag.set(i, i, c.clone());
        }
        let (group, map) = cokernel_of(&diag, n);
        let gens = (0..n)
            .map(|i| {
                let mut e = vec![BigInt::zero(); n];
                e[i] = BigInt::one();
                map.project_torsion(&e)
            })
            .collect();
        (group, gens)
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> BigInt {
        self.factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn zero(&self) -> AbElem {
        vec![BigInt::zero(); self.factors.len()]
    }

    /// Canonical form: coordinates reduced into [0, di).
    pub fn reduce(&self, coords: &[BigInt]) -> Result<AbElem> {
        if coords.len() != self.factors.len() {
            return Err(Error::ElementShape(format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                coords.len()
            )));
        }
        Ok(coords
            .iter()
            .zip(&self.factors)
            .map(|(a, d)| a.mod_floor(d))
            .collect())
    }

    pub fn add(&self, a: &AbElem, b: &AbElem) -> AbElem {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((x, y), d)| (x + y).mod_floor(d))
            .collect()
    }

    pub fn neg(&self, a: &AbElem) -> AbElem {
        a.iter()
            .zip(&self.factors)
            .map(|(x, d)| (-x).mod_floor(d))
            .collect()
    }

    pub fn sub(&self, a: &AbElem, b: &AbElem) -> AbElem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, n: &BigInt, a: &AbElem) -> AbElem {
        a.iter()
            .zip(&self.factors)
            .map(|(x, d)| (x * n).mod_floor(d))
            .collect()
    }

    pub fn is_zero_elem(&self, a: &AbElem) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// Order of an element: lcm over coordinates of di / gcd(ai, di).
    pub fn elem_order(&self, a: &AbElem) -> BigInt {
        let mut ord = BigInt::one();
        for (x, d) in a.iter().zip(&self.factors) {
            let o = d / x.gcd(d);
            ord = ord.lcm(&o);
        }
        ord
    }

    /// All elements, mixed-radix order. Guarded; errors above `limit`.
    pub fn elements(&self, limit: u64) -> Result<Vec<AbElem>> {
        let order = self.order();
        let n = order
            .to_u64()
            .filter(|&n| n <= limit)
            .ok_or_else(|| Error::SizeGuard(format!("group order {order} exceeds {limit}")))?;
        let mut out = Vec::with_capacity(n as usize);
        let mut cur = self.zero();
        loop {
            out.push(cur.clone());
            let mut i = 0;
            loop {
                if i == self.factors.len() {
                    return Ok(out);
                }
                cur[i] += 1;
                if cur[i] < self.factors[i] {
                    break;
                }
                cur[i] = BigInt::zero();
                i += 1;
            }
        }
    }

    /// Standard generators e1..em.
    pub fn generators(&self) -> Vec<AbElem> {
        (0..self.factors.len())
            .map(|i| {
                let mut e = self.zero();
                e[i] = BigInt::one();
                e
            })
            .collect()
    }
}

impl fmt::Display for FiniteAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Cokernel data: the finite and free parts of Z^ambient / col-span(M),
/// together with the projection.
pub struct CokernelMap {
    u: IntMatrix,
    u_inv: IntMatrix,
    diag: Vec<BigInt>,
    rank: usize,
    ambient: usize,
    /// positions i < rank with diag[i] >= 2
    torsion_positions: Vec<usize>,
}

impl CokernelMap {
    /// Torsion coordinates of the class of `v`.
    pub fn project_torsion(&self, v: &[BigInt]) -> AbElem {
        assert_eq!(v.len(), self.ambient);
        let w = self.u.mul_vec(v);
        self.torsion_positions
            .iter()
            .map(|&i| w[i].mod_floor(&self.diag[i]))
            .collect()
    }

    /// Free coordinates of the class of `v` (the rows past the rank).
    pub fn project_free(&self, v: &[BigInt]) -> Vec<BigInt> {
        let w = self.u.mul_vec(v);
        (self.rank..self.ambient).map(|i| w[i].clone()).collect()
    }

    /// Ambient representative of the i-th torsion generator.
    pub fn torsion_lift(&self, i: usize) -> Vec<BigInt> {
        self.u_inv.column(self.torsion_positions[i])
    }

    /// True exactly when `v` lies in the column span.
    pub fn in_image(&self, v: &[BigInt]) -> bool {
        let w = self.u.mul_vec(v);
        for i in 0..self.ambient {
            if i < self.rank {
                if !w[i].mod_floor(&self.diag[i]).is_zero() {
                    return false;
                }
            } else if !w[i].is_zero() {
                return false;
            }
        }
        true
    }
}

/// coker(Z^cols -> Z^ambient) = finite + Z^free_rank.
pub fn cokernel(m: &IntMatrix, ambient: usize) -> (FiniteAbGroup, usize, CokernelMap) {
    let (group, map) = cokernel_of(m, ambient);
    let free = ambient - map.rank;
    (group, free, map)
}

fn cokernel_of(m: &IntMatrix, ambient: usize) -> (FiniteAbGroup, CokernelMap) {
    assert_eq!(m.rows, ambient, "cokernel: M must have ambient_rank rows");
    let res = snf(m);
    let diag = res.diagonal();
    let rank = res.rank;
    let torsion_positions: Vec<usize> = (0..rank).filter(|&i| diag[i] >= BigInt::from(2)).collect();
    let factors: Vec<BigInt> = torsion_positions.iter().map(|&i| diag[i].clone()).collect();
    let group = FiniteAbGroup::new(factors).expect("snf chain is an invariant chain");
    let u_inv = crate::matrix::inverse_unimodular(&res.u);
    let map = CokernelMap {
        u: res.u,
        u_inv,
        diag,
        rank,
        ambient,
        torsion_positions,
    };
    (group, map)
}

/// A subgroup of a finite abelian group, in its own invariant-factor form,
/// with generator images and a coordinate map back.
pub struct Subgroup {
    pub ambient: FiniteAbGroup,
    pub group: FiniteAbGroup,
    /// images in the ambient group of the subgroup generators
    pub gen_images: Vec<AbElem>,
    basis_rat: RatMatrix,
    coker: CokernelMap,
}

impl Subgroup {
    /// Coordinates in the subgroup presentation of an ambient element, or
    /// None when the element is not in the subgroup.
    pub fn coords_of(&self, v: &AbElem) -> Option<AbElem> {
        let rhs: Vec<_> = v
            .iter()
            .map(|x| num_rational::BigRational::from_integer(x.clone()))
            .collect();
        let w = self.basis_rat.solve(&rhs)?;
        if !w.iter().all(|x| x.denom().is_one()) {
            return None;
        }
        let wi: Vec<BigInt> = w.into_iter().map(|x| x.to_integer()).collect();
        Some(self.coker.project_torsion(&wi))
    }

    pub fn contains(&self, v: &AbElem) -> bool {
        self.coords_of(v).is_some()
    }

    /// Ambient image of a subgroup element given in subgroup coordinates.
    pub fn embed(&self, coords: &AbElem) -> AbElem {
        let mut acc = self.ambient.zero();
        for (c, g) in coords.iter().zip(&self.gen_images) {
            acc = self.ambient.add(&acc, &self.ambient.scale(c, g));
        }
        acc
    }
}

/// The subgroup of `f` generated by `gens`.
pub fn subgroup(f: &FiniteAbGroup, gens: &[AbElem]) -> Subgroup {
    let u = f.rank();
    // lattice spanned by the generators and the relation lattice diag(d)
    let mut cols: Vec<Vec<BigInt>> = gens.to_vec();
    for (i, d) in f.invariant_factors().iter().enumerate() {
        let mut e = vec![BigInt::zero(); u];
        e[i] = d.clone();
        cols.push(e);
    }
    let basis = if u == 0 {
        IntMatrix::zeros(0, 0)
    } else {
        lattice_basis(&IntMatrix::from_columns(cols))
    };
    assert_eq!(basis.cols, u, "subgroup lattice has full rank");
    // relations: diag(d) in basis coordinates
    let basis_rat = RatMatrix::from_int(&basis);
    let mut rel = IntMatrix::zeros(u, u);
    for (i, d) in f.invariant_factors().iter().enumerate() {
        let mut e = vec![num_rational::BigRational::zero(); u];
        e[i] = num_rational::BigRational::from_integer(d.clone());
        let w = basis_rat.solve(&e).expect("diag(d) lies in the lattice");
        for (r, x) in w.iter().enumerate() {
            assert!(x.denom().is_one());
            rel.set(r, i, x.to_integer());
        }
    }
    let (group, coker) = cokernel_of(&rel, u);
    let gen_images = (0..group.rank())
        .map(|i| {
            let lift = coker.torsion_lift(i);
            let amb = basis.mul_vec(&lift);
            f.reduce(&amb).expect("shape")
        })
        .collect();
    Subgroup {
        ambient: f.clone(),
        group,
        gen_images,
        basis_rat,
        coker,
    }
}

/// A quotient of a finite abelian group by the subgroup generated by `rels`,
/// with projection and lifts.
pub struct Quotient {
    pub ambient: FiniteAbGroup,
    pub group: FiniteAbGroup,
    coker: CokernelMap,
}

impl Quotient {
    pub fn project(&self, v: &AbElem) -> AbElem {
        self.coker.project_torsion(v)
    }

    /// Ambient representative of the i-th quotient generator.
    pub fn lift_gen(&self, i: usize) -> AbElem {
        self.ambient
            .reduce(&self.coker.torsion_lift(i))
            .expect("shape")
    }
}

pub fn quotient(f: &FiniteAbGroup, rels: &[AbElem]) -> Quotient {
    let u = f.rank();
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for (i, d) in f.invariant_factors().iter().enumerate() {
        let mut e = vec![BigInt::zero(); u];
        e[i] = d.clone();
        cols.push(e);
    }
    cols.extend(rels.iter().cloned());
    let m = if u == 0 {
        IntMatrix::zeros(0, 0)
    } else {
        IntMatrix::from_columns(cols)
    };
    let (group, coker) = cokernel_of(&m, u);
    Quotient {
        ambient: f.clone(),
        group,
        coker,
    }
}

/// Kernel of the map Z^u -> prod_j Z/mod_j given by integer rows `rows`
/// (one row per j), i.e. the lattice { a : rows[j] . a = 0 mod mod_j }.
/// Returns a u x u basis matrix (the kernel always has full rank).
pub fn congruence_kernel(u: usize, rows: &[Vec<BigInt>], mods: &[BigInt]) -> IntMatrix {
    assert_eq!(rows.len(), mods.len());
    if rows.is_empty() || u == 0 {
        return IntMatrix::identity(u);
    }
    let s = rows.len();
    // integer kernel of [S | diag(mods)] projected to the first u coords
    let mut m = IntMatrix::zeros(s, u + s);
    for (j, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), u);
        for (i, v) in row.iter().enumerate() {
            m.set(j, i, v.clone());
        }
        m.set(j, u + j, mods[j].clone());
    }
    let k = crate::matrix::kernel_basis(&m);
    let projected: Vec<Vec<BigInt>> = (0..k.cols)
        .map(|j| (0..u).map(|i| k.at(i, j).clone()).collect())
        .collect();
    let basis = lattice_basis(&IntMatrix::from_columns(projected));
    assert_eq!(basis.cols, u, "congruence kernel has full rank");
    basis
}
