//! Root data for the simple simply-connected compact Lie types.
//!
//! Cartan matrices are hardcoded per the Bourbaki numbering and validated at
//! construction (determinant, symmetrizability, positive-definiteness of the
//! symmetrisation). Everything downstream works in the simple-coroot basis:
//! the Gram matrix of the basic inner product is D * C for the unique
//! positive rational diagonal D making that product symmetric with minimal
//! even diagonal, and the fundamental coweights are the columns of C^{-1}.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::abelian::{cokernel, FiniteAbGroup};
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn from_char(c: char) -> Option<Series> {
        match c {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    /// Rank constraints: A >= 1, B >= 2, C >= 2, D >= 3 (D3 = A3 is
    /// permitted and used as a consistency check), E in {6,7,8}, F = 4,
    /// G = 2.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidSimpleType {
                series: series.as_char(),
                rank,
            });
        }
        Ok(SimpleType { series, rank })
    }

    /// Compact-group name, e.g. SU(3), Spin(7), Sp(2), E6.
    pub fn group_name(&self) -> String {
        match self.series {
            Series::A => format!("SU({})", self.rank + 1),
            Series::B => format!("Spin({})", 2 * self.rank + 1),
            Series::C => format!("Sp({})", self.rank),
            Series::D => format!("Spin({})", 2 * self.rank),
            Series::E => format!("E{}", self.rank),
            Series::F => "F4".to_string(),
            Series::G => "G2".to_string(),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.as_char(), self.rank)
    }
}

/// A vector in the Cartan algebra, coordinates in the simple-coroot basis.
/// Integral coordinates mean membership in the coroot lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoweightVector(pub Vec<BigRational>);

impl CoweightVector {
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.denom().is_one())
    }

    pub fn add(&self, other: &CoweightVector) -> CoweightVector {
        CoweightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_integral(&self, shift: &[BigInt]) -> CoweightVector {
        CoweightVector(
            self.0
                .iter()
                .zip(shift)
                .map(|(a, b)| a + BigRational::from_integer(b.clone()))
                .collect(),
        )
    }

    pub fn scale(&self, n: &BigInt) -> CoweightVector {
        let n = BigRational::from_integer(n.clone());
        CoweightVector(self.0.iter().map(|a| a * &n).collect())
    }
}

/// Bourbaki Cartan matrix, entries C[i][j] = <alpha_i, coroot of alpha_j>.
pub fn cartan_matrix(t: SimpleType) -> IntMatrix {
    let n = t.rank;
    let mut edges: Vec<(usize, usize)> = Vec::new(); // simply-laced bonds
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, BigInt::from(2));
    }
    match t.series {
        Series::A => {
            for i in 1..n {
                edges.push((i - 1, i));
            }
        }
        Series::B => {
            for i in 1..n - 1 {
                edges.push((i - 1, i));
            }
            // double bond: alpha_n short
            m.set(n - 2, n - 1, BigInt::from(-2));
            m.set(n - 1, n - 2, BigInt::from(-1));
        }
        Series::C => {
            for i in 1..n - 1 {
                edges.push((i - 1, i));
            }
            // double bond: alpha_n long
            m.set(n - 2, n - 1, BigInt::from(-1));
            m.set(n - 1, n - 2, BigInt::from(-2));
        }
        Series::D => {
            for i in 1..n - 2 {
                edges.push((i - 1, i));
            }
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
        }
        Series::E => {
            // chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
            for (a, b) in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] {
                edges.push((a - 1, b - 1));
            }
            if n >= 7 {
                edges.push((5, 6));
            }
            if n == 8 {
                edges.push((6, 7));
            }
        }
        Series::F => {
            edges.push((0, 1));
            edges.push((2, 3));
            // double bond between nodes 2 and 3: alpha_2 long
            m.set(1, 2, BigInt::from(-2));
            m.set(2, 1, BigInt::from(-1));
        }
        Series::G => {
            // alpha_1 short, alpha_2 long
            m.set(0, 1, BigInt::from(-1));
            m.set(1, 0, BigInt::from(-3));
        }
    }
    for (a, b) in edges {
        m.set(a, b, BigInt::from(-1));
        m.set(b, a, BigInt::from(-1));
    }
    validate_cartan(t, &m);
    m
}

fn validate_cartan(t: SimpleType, m: &IntMatrix) {
    let det = m.det();
    let expected = BigInt::from(centre_order(t));
    assert_eq!(det, expected, "Cartan determinant for {t}");
    for i in 0..m.rows {
        assert_eq!(*m.at(i, i), BigInt::from(2));
        for j in 0..m.rows {
            if i != j {
                let v = m.at(i, j).clone();
                assert!(
                    (-BigInt::from(3)..=BigInt::zero()).contains(&v),
                    "off-diagonal entry {v} out of range for {t}"
                );
            }
        }
    }
    let gram = gram_from_cartan(m);
    assert!(gram.is_symmetric(), "symmetrisation failed for {t}");
    let cleared = clear_denominators(&gram);
    assert!(
        cleared.is_positive_definite(),
        "symmetrisation not positive definite for {t}"
    );
}

fn centre_order(t: SimpleType) -> u64 {
    match t.series {
        Series::A => t.rank as u64 + 1,
        Series::B | Series::C => 2,
        Series::D => 4,
        Series::E => (9 - t.rank) as u64,
        Series::F | Series::G => 1,
    }
}

fn clear_denominators(m: &RatMatrix) -> IntMatrix {
    let mut lcm = BigInt::one();
    for i in 0..m.rows {
        for j in 0..m.cols {
            lcm = lcm.lcm(m.at(i, j).denom());
        }
    }
    let mut out = IntMatrix::zeros(m.rows, m.cols);
    let lcm_r = BigRational::from_integer(lcm);
    for i in 0..m.rows {
        for j in 0..m.cols {
            let v = m.at(i, j) * &lcm_r;
            out.set(i, j, v.to_integer());
        }
    }
    out
}

/// D * C for the positive diagonal D determined by symmetry, scaled to the
/// minimal even diagonal.
fn gram_from_cartan(c: &IntMatrix) -> RatMatrix {
    let n = c.rows;
    if n == 0 {
        return RatMatrix::zeros(0, 0);
    }
    // propagate relative weights along bonds: d_i * C[i][j] = d_j * C[j][i]
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let di = d[i].clone().unwrap();
        for j in 0..n {
            if i == j || c.at(i, j).is_zero() || d[j].is_some() {
                continue;
            }
            let cij = BigRational::from_integer(c.at(i, j).clone());
            let cji = BigRational::from_integer(c.at(j, i).clone());
            d[j] = Some(&di * cij / cji);
            queue.push(j);
        }
    }
    let mut d: Vec<BigRational> = d
        .into_iter()
        .map(|x| x.expect("Dynkin diagram is connected"))
        .collect();
    // scale to the smallest positive integral solution
    let mut lcm = BigInt::one();
    for v in &d {
        lcm = lcm.lcm(v.denom());
    }
    let lcm = BigRational::from_integer(lcm);
    for v in d.iter_mut() {
        *v = &*v * &lcm;
    }
    let mut gcd = BigInt::zero();
    for v in &d {
        gcd = gcd.gcd(&v.to_integer());
    }
    let gcd = BigRational::from_integer(gcd);
    for v in d.iter_mut() {
        *v = &*v / &gcd;
    }
    let mut gram = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, &d[i] * BigRational::from_integer(c.at(i, j).clone()));
        }
    }
    gram
}

/// Gram matrix of the basic inner product I on the simple-coroot basis:
/// symmetric, positive definite, even diagonal with minimum exactly 2.
pub fn coroot_gram(t: SimpleType) -> RatMatrix {
    gram_from_cartan(&cartan_matrix(t))
}

/// Fundamental coweights in the simple-coroot basis: the columns of C^{-1}
/// (so Cartan matrix times coweight matrix is the identity).
pub fn fundamental_coweights(t: SimpleType) -> RatMatrix {
    let c = RatMatrix::from_int(&cartan_matrix(t));
    c.inverse().expect("Cartan matrix is invertible")
}

/// Exact norm I(w, w) of a vector in coroot coordinates.
pub fn coweight_norm(t: SimpleType, w: &CoweightVector) -> Result<BigRational> {
    let gram = coroot_gram(t);
    if w.0.len() != gram.rows {
        return Err(Error::DimensionMismatch(format!(
            "coweight has {} coordinates, rank is {}",
            w.0.len(),
            gram.rows
        )));
    }
    let gv = gram.mul_vec(&w.0);
    Ok(w.0.iter().zip(&gv).map(|(a, b)| a * b).sum())
}

/// Pairing I(v, w) of two vectors in coroot coordinates.
pub fn coweight_pairing(
    t: SimpleType,
    v: &CoweightVector,
    w: &CoweightVector,
) -> Result<BigRational> {
    let gram = coroot_gram(t);
    if v.0.len() != gram.rows || w.0.len() != gram.rows {
        return Err(Error::DimensionMismatch("pairing shape".into()));
    }
    let gw = gram.mul_vec(&w.0);
    Ok(v.0.iter().zip(&gw).map(|(a, b)| a * b).sum())
}

/// The centre Z(G) = (coweight lattice) / (coroot lattice), together with
/// explicit coweight lifts of the named generators:
///
///   A_n: omega_1          B_n: omega_1        C_n: omega_n
///   D_n (odd): omega_n    D_n (even): omega_{n-1}, omega_n
///   E6: omega_1           E7: omega_7         E8, F4, G2: trivial
pub fn centre_of(t: SimpleType) -> (FiniteAbGroup, Vec<CoweightVector>) {
    let coweights = fundamental_coweights(t);
    let named: Vec<usize> = match t.series {
        Series::A => vec![0],
        Series::B => vec![0],
        Series::C => vec![t.rank - 1],
        Series::D => {
            if t.rank % 2 == 0 {
                vec![t.rank - 2, t.rank - 1]
            } else {
                vec![t.rank - 1]
            }
        }
        Series::E if t.rank == 6 => vec![0],
        Series::E if t.rank == 7 => vec![6],
        _ => vec![],
    };
    let lifts: Vec<CoweightVector> = named
        .iter()
        .map(|&i| CoweightVector(coweights.column(i)))
        .collect();
    let group = match (t.series, t.rank % 2) {
        (Series::A, _) => FiniteAbGroup::cyclic(t.rank as i64 + 1),
        (Series::B, _) | (Series::C, _) => FiniteAbGroup::cyclic(2),
        (Series::D, 0) => {
            FiniteAbGroup::new(vec![BigInt::from(2), BigInt::from(2)]).expect("chain")
        }
        (Series::D, _) => FiniteAbGroup::cyclic(4),
        (Series::E, _) => FiniteAbGroup::cyclic(9 - t.rank as i64),
        _ => FiniteAbGroup::trivial(),
    };
    debug_assert!(verify_centre(t, &group, &lifts), "centre table for {t}");
    (group, lifts)
}

/// Check the hardcoded table against the cokernel of the Cartan matrix: in
/// the coweight basis the coroot lattice is the column span of C, and the
/// named lifts (with coweight coordinates e_i) must be non-integral, have
/// the orders of the invariant factors, and generate the quotient.
fn verify_centre(t: SimpleType, group: &FiniteAbGroup, lifts: &[CoweightVector]) -> bool {
    let c = cartan_matrix(t);
    let (coker, _, map) = cokernel(&c, t.rank);
    if coker.invariant_factors() != group.invariant_factors() {
        return false;
    }
    let coweights = fundamental_coweights(t);
    let mut named_indices = Vec::new();
    for l in lifts {
        match (0..coweights.cols).find(|&i| coweights.column(i) == l.0) {
            Some(i) => named_indices.push(i),
            None => return false,
        }
    }
    let mut gens = Vec::new();
    for (k, &i) in named_indices.iter().enumerate() {
        let mut e = vec![BigInt::zero(); t.rank];
        e[i] = BigInt::one();
        let p = map.project_torsion(&e);
        if coker.elem_order(&p) != group.invariant_factors()[k] {
            return false;
        }
        if lifts[k].is_integral() {
            return false;
        }
        gens.push(p);
    }
    let sub = crate::abelian::subgroup(&coker, &gens);
    sub.group.order() == group.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    fn st(series: Series, rank: usize) -> SimpleType {
        SimpleType::new(series, rank).unwrap()
    }

    #[test]
    fn rank_validation() {
        assert!(SimpleType::new(Series::A, 0).is_err());
        assert!(SimpleType::new(Series::B, 1).is_err());
        assert!(SimpleType::new(Series::D, 2).is_err());
        assert!(SimpleType::new(Series::D, 3).is_ok());
        assert!(SimpleType::new(Series::E, 5).is_err());
        assert!(SimpleType::new(Series::F, 3).is_err());
        assert!(SimpleType::new(Series::G, 2).is_ok());
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(
            cartan_matrix(st(Series::A, 1)),
            IntMatrix::from_rows(vec![vec![2]])
        );
        assert_eq!(
            cartan_matrix(st(Series::A, 2)),
            IntMatrix::from_rows(vec![vec![2, -1], vec![-1, 2]])
        );
        assert_eq!(
            cartan_matrix(st(Series::G, 2)),
            IntMatrix::from_rows(vec![vec![2, -1], vec![-3, 2]])
        );
        assert_eq!(
            cartan_matrix(st(Series::B, 2)),
            IntMatrix::from_rows(vec![vec![2, -2], vec![-1, 2]])
        );
        // every supported type up to rank 12 passes internal validation
        for rank in 1..=12 {
            let _ = cartan_matrix(st(Series::A, rank));
        }
        for rank in 2..=12 {
            let _ = cartan_matrix(st(Series::B, rank));
            let _ = cartan_matrix(st(Series::C, rank));
        }
        for rank in 3..=12 {
            let _ = cartan_matrix(st(Series::D, rank));
        }
        for rank in 6..=8 {
            let _ = cartan_matrix(st(Series::E, rank));
        }
        let _ = cartan_matrix(st(Series::F, 4));
        let _ = cartan_matrix(st(Series::G, 2));
    }

    #[test]
    fn gram_properties() {
        let all: Vec<SimpleType> = (1..=12)
            .map(|r| st(Series::A, r))
            .chain((2..=12).map(|r| st(Series::B, r)))
            .chain((2..=12).map(|r| st(Series::C, r)))
            .chain((3..=12).map(|r| st(Series::D, r)))
            .chain((6..=8).map(|r| st(Series::E, r)))
            .chain([st(Series::F, 4), st(Series::G, 2)])
            .collect();
        let two = rat(2, 1);
        for t in all {
            let g = coroot_gram(t);
            assert!(g.is_symmetric(), "{t}");
            let mut min: Option<BigRational> = None;
            for i in 0..g.rows {
                let v = g.at(i, i).clone();
                assert!(v.denom().is_one(), "{t}");
                assert!((v.to_integer() % BigInt::from(2)).is_zero(), "{t}");
                min = Some(match min {
                    None => v,
                    Some(m) if v < m => v,
                    Some(m) => m,
                });
            }
            assert_eq!(min.unwrap(), two, "{t}: min diagonal is 2");
        }
    }

    #[test]
    fn gram_simply_laced_equals_cartan() {
        for t in [st(Series::A, 3), st(Series::D, 5), st(Series::E, 6)] {
            let g = coroot_gram(t);
            let c = RatMatrix::from_int(&cartan_matrix(t));
            assert_eq!(g, c, "{t}");
        }
        assert_eq!(coroot_gram(st(Series::A, 1)).at(0, 0), &rat(2, 1));
    }

    #[test]
    fn gram_c2_diagonal() {
        // one short coroot of norm 2, one long of norm 4
        let g = coroot_gram(st(Series::C, 2));
        let mut diag: Vec<BigRational> = (0..2).map(|i| g.at(i, i).clone()).collect();
        diag.sort();
        assert_eq!(diag, vec![rat(2, 1), rat(4, 1)]);
    }

    #[test]
    fn coweight_duality() {
        for t in [
            st(Series::A, 4),
            st(Series::B, 3),
            st(Series::C, 5),
            st(Series::D, 6),
            st(Series::E, 7),
            st(Series::F, 4),
            st(Series::G, 2),
        ] {
            let c = RatMatrix::from_int(&cartan_matrix(t));
            let w = fundamental_coweights(t);
            assert_eq!(c.mul(&w), RatMatrix::identity(t.rank), "{t}");
        }
    }

    #[test]
    fn coweight_norms() {
        // A1: omega_1 = alpha/2, I(w,w) = 1/2
        let t = st(Series::A, 1);
        let w = CoweightVector(fundamental_coweights(t).column(0));
        assert_eq!(w.0, vec![rat(1, 2)]);
        assert_eq!(coweight_norm(t, &w).unwrap(), rat(1, 2));

        // B_n: omega_1 has norm 1
        for r in 2..=6 {
            let t = st(Series::B, r);
            let w = CoweightVector(fundamental_coweights(t).column(0));
            assert_eq!(coweight_norm(t, &w).unwrap(), rat(1, 1), "B{r}");
        }

        // D5: omega_5 has norm 5/4
        let t = st(Series::D, 5);
        let w = CoweightVector(fundamental_coweights(t).column(4));
        assert_eq!(coweight_norm(t, &w).unwrap(), rat(5, 4));

        // C_n: omega_n has norm n/2 (forced by B2 = C2 and the dual datum)
        for r in 2..=6 {
            let t = st(Series::C, r);
            let w = CoweightVector(fundamental_coweights(t).column(r - 1));
            assert_eq!(coweight_norm(t, &w).unwrap(), rat(r as i64, 2), "C{r}");
        }

        // E6: omega_1 has norm 4/3; E7: omega_7 has norm 3/2
        let t = st(Series::E, 6);
        let w = CoweightVector(fundamental_coweights(t).column(0));
        assert_eq!(coweight_norm(t, &w).unwrap(), rat(4, 3));
        let t = st(Series::E, 7);
        let w = CoweightVector(fundamental_coweights(t).column(6));
        assert_eq!(coweight_norm(t, &w).unwrap(), rat(3, 2));

        // dimension mismatch is an error
        assert!(coweight_norm(st(Series::A, 2), &CoweightVector(vec![rat(1, 2)])).is_err());
    }

    #[test]
    fn centres() {
        // A_{n-1}: Z/n generated by omega_1
        for n in 2..=9i64 {
            let t = st(Series::A, (n - 1) as usize);
            let (g, lifts) = centre_of(t);
            assert_eq!(g.invariant_factors(), &[BigInt::from(n)]);
            assert_eq!(lifts.len(), 1);
            assert!(!lifts[0].is_integral());
        }
        // E8, F4, G2 are centreless
        for t in [st(Series::E, 8), st(Series::F, 4), st(Series::G, 2)] {
            let (g, lifts) = centre_of(t);
            assert!(g.is_trivial(), "{t}");
            assert!(lifts.is_empty());
        }
        // D even: Z/2 x Z/2 on the last two coweights
        for r in [4usize, 6, 8] {
            let (g, lifts) = centre_of(st(Series::D, r));
            assert_eq!(g.invariant_factors(), &[BigInt::from(2), BigInt::from(2)]);
            assert_eq!(lifts.len(), 2);
        }
        // D odd: Z/4
        for r in [3usize, 5, 7] {
            let (g, lifts) = centre_of(st(Series::D, r));
            assert_eq!(g.invariant_factors(), &[BigInt::from(4)]);
            assert_eq!(lifts.len(), 1);
        }
        // order always matches the Cartan determinant
        for t in [
            st(Series::A, 5),
            st(Series::B, 4),
            st(Series::C, 3),
            st(Series::D, 7),
            st(Series::E, 6),
            st(Series::E, 7),
        ] {
            let (g, _) = centre_of(t);
            assert_eq!(g.order(), cartan_matrix(t).det(), "{t}");
        }
    }

    #[test]
    fn lift_orders_match() {
        // each named lift is non-integral and its order relative to the
        // coroot lattice matches its invariant factor
        for t in [
            st(Series::A, 3),
            st(Series::B, 3),
            st(Series::C, 4),
            st(Series::D, 4),
            st(Series::D, 5),
            st(Series::E, 7),
        ] {
            let (g, lifts) = centre_of(t);
            for (lift, d) in lifts.iter().zip(g.invariant_factors()) {
                let mut m = BigInt::one();
                while !lift.scale(&m).is_integral() {
                    m += 1;
                }
                assert_eq!(&m, d, "{t}");
            }
        }
    }
}
