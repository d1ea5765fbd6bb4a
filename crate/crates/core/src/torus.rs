//! Drinfel'd centres of categorical tori.
//!
//! A categorical torus is determined by an integer bilinear form J on the
//! cocharacter lattice; the level form is I = -(J + J^t). The centre has
//! object group (Lambda + t)/Pi with Pi embedded by pi -> (tau(pi), pi),
//! tau = I viewed as a map Pi -> Lambda, and quadratic form
//!
//!   q([lambda, x]) = lambda(x) + J(x, x)   (mod 1),
//!
//! with braiding beta((l,x),(l',x')) = l(x') + J(x', x). Splitting Pi along
//! ker(tau) via Smith normal form decomposes the object group into a vector
//! part, a free discrete part, a compact torus and a finite group carrying
//! the interesting form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::abelian::{AbElem, FiniteAbGroup};
use crate::error::{Error, Result};
use crate::matrix::{inverse_unimodular, snf, IntMatrix, RatMatrix};
use crate::qform::QForm;
use crate::qz::QZElem;

/// A torus with an integer level matrix J.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusLevel {
    pub rank: usize,
    pub j: IntMatrix,
}

impl TorusLevel {
    pub fn new(rank: usize, j: IntMatrix) -> Result<Self> {
        if j.rows != rank || j.cols != rank {
            return Err(Error::DimensionMismatch(format!(
                "J is {}x{}, torus rank is {rank}",
                j.rows, j.cols
            )));
        }
        Ok(TorusLevel { rank, j })
    }

    /// The level form I = -(J + J^t); symmetric with even diagonal.
    pub fn level_form(&self) -> IntMatrix {
        self.j.add(&self.j.transpose()).neg()
    }

    /// Recorded as a flag, never required.
    pub fn positive_definite(&self) -> bool {
        self.rank == 0 || self.level_form().is_positive_definite()
    }
}

/// A rational point of the ambient group (Lambda + t) x (simple centres).
/// For a bare torus the `simples` list is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AmbientPoint {
    pub lambda: Vec<BigRational>,
    pub x: Vec<BigRational>,
    pub simples: Vec<AbElem>,
}

impl AmbientPoint {
    pub fn torus(lambda: Vec<BigRational>, x: Vec<BigRational>) -> Self {
        AmbientPoint {
            lambda,
            x,
            simples: vec![],
        }
    }

    pub fn zero(rank: usize, simple_shapes: &[usize]) -> Self {
        AmbientPoint {
            lambda: vec![BigRational::zero(); rank],
            x: vec![BigRational::zero(); rank],
            simples: simple_shapes
                .iter()
                .map(|&m| vec![BigInt::zero(); m])
                .collect(),
        }
    }

    pub fn add(&self, other: &AmbientPoint) -> AmbientPoint {
        AmbientPoint {
            lambda: self
                .lambda
                .iter()
                .zip(&other.lambda)
                .map(|(a, b)| a + b)
                .collect(),
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            simples: self
                .simples
                .iter()
                .zip(&other.simples)
                .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p + q).collect())
                .collect(),
        }
    }

    pub fn scale(&self, n: &BigInt) -> AmbientPoint {
        let nr = BigRational::from_integer(n.clone());
        AmbientPoint {
            lambda: self.lambda.iter().map(|a| a * &nr).collect(),
            x: self.x.iter().map(|a| a * &nr).collect(),
            simples: self
                .simples
                .iter()
                .map(|s| s.iter().map(|c| c * n).collect())
                .collect(),
        }
    }
}

/// Exact evaluator for the full quadratic form at rational ambient points:
/// the torus formula lambda(x) + J(x,x) plus the finite forms of the simple
/// factors.
#[derive(Clone)]
pub struct Evaluator {
    pub torus: Option<TorusLevel>,
    pub simple_forms: Vec<QForm>,
}

impl Evaluator {
    pub fn eval(&self, p: &AmbientPoint) -> Result<QZElem> {
        let mut acc = match &self.torus {
            Some(tl) => torus_q(tl, &p.lambda, &p.x)?,
            None => {
                if !p.lambda.is_empty() || !p.x.is_empty() {
                    return Err(Error::DimensionMismatch(
                        "torus coordinates on a torus-free centre".into(),
                    ));
                }
                QZElem::zero()
            }
        };
        if p.simples.len() != self.simple_forms.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} simple components, expected {}",
                p.simples.len(),
                self.simple_forms.len()
            )));
        }
        for (form, coords) in self.simple_forms.iter().zip(&p.simples) {
            acc = acc.add(&form.eval(coords)?);
        }
        Ok(acc)
    }

    /// Polarised form sigma(p, p') = q(p + p') - q(p) - q(p').
    pub fn sigma(&self, p: &AmbientPoint, p2: &AmbientPoint) -> Result<QZElem> {
        Ok(self
            .eval(&p.add(p2))?
            .sub(&self.eval(p)?)
            .sub(&self.eval(p2)?))
    }
}

/// q([lambda, x]) = lambda(x) + J(x,x) mod 1, exact at rational points.
pub fn torus_q(tl: &TorusLevel, lambda: &[BigRational], x: &[BigRational]) -> Result<QZElem> {
    if lambda.len() != tl.rank || x.len() != tl.rank {
        return Err(Error::DimensionMismatch(format!(
            "point has ({}, {}) coordinates, torus rank is {}",
            lambda.len(),
            x.len(),
            tl.rank
        )));
    }
    let mut acc = BigRational::zero();
    for (l, xi) in lambda.iter().zip(x) {
        acc += l * xi;
    }
    for i in 0..tl.rank {
        for j in 0..tl.rank {
            acc += BigRational::from_integer(tl.j.at(i, j).clone()) * &x[i] * &x[j];
        }
    }
    Ok(QZElem::from_ratio(&acc))
}

/// Braiding exponent beta((l,x),(l',x')) = l(x') + J(x', x) mod 1.
pub fn torus_braiding(
    tl: &TorusLevel,
    p: (&[BigRational], &[BigRational]),
    p2: (&[BigRational], &[BigRational]),
) -> Result<QZElem> {
    let (lambda, x) = p;
    let (_lambda2, x2) = p2;
    if lambda.len() != tl.rank
        || x.len() != tl.rank
        || _lambda2.len() != tl.rank
        || x2.len() != tl.rank
    {
        return Err(Error::DimensionMismatch("braiding point shape".into()));
    }
    let mut acc = BigRational::zero();
    for (l, xi) in lambda.iter().zip(x2) {
        acc += l * xi;
    }
    for i in 0..tl.rank {
        for j in 0..tl.rank {
            acc += BigRational::from_integer(tl.j.at(i, j).clone()) * &x2[i] * &x[j];
        }
    }
    Ok(QZElem::from_ratio(&acc))
}

/// The splitting data of the torus centre, kept alongside the structured
/// result so kernel elements can be lifted later.
#[derive(Clone)]
pub struct TorusDecomp {
    pub level: TorusLevel,
    pub tau: IntMatrix,
    /// rank of tau
    pub rho: usize,
    pub v: IntMatrix,
    pub v_inv_rat: RatMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    /// nonzero SNF diagonal entries of tau
    pub diag: Vec<BigInt>,
    /// positions among 0..rho with diag >= 2 (the finite generators)
    pub kept: Vec<usize>,
}

impl TorusDecomp {
    pub fn new(tl: &TorusLevel) -> Self {
        let tau = tl.level_form();
        let res = snf(&tau);
        let diag: Vec<BigInt> = (0..res.rank).map(|i| res.d.at(i, i).clone()).collect();
        let kept: Vec<usize> = (0..res.rank)
            .filter(|&i| diag[i] >= BigInt::from(2))
            .collect();
        let u_inv = inverse_unimodular(&res.u);
        let v_inv_rat = RatMatrix::from_int(&res.v).inverse().expect("V unimodular");
        TorusDecomp {
            level: tl.clone(),
            tau,
            rho: res.rank,
            v: res.v,
            v_inv_rat,
            u: res.u,
            u_inv,
            diag,
            kept,
        }
    }

    pub fn rank(&self) -> usize {
        self.level.rank
    }

    /// Finite part Lambda_im / tau(Pi_coim) in invariant-factor form.
    pub fn finite_group(&self) -> FiniteAbGroup {
        FiniteAbGroup::new(self.kept.iter().map(|&i| self.diag[i].clone()).collect())
            .expect("snf chain")
    }

    /// Ambient representative of finite generator k: lambda = U^{-1} e_i,
    /// x = tau_im^{-1} lambda = (1/d_i) V e_i.
    pub fn finite_gen_rep(&self, k: usize) -> AmbientPoint {
        let i = self.kept[k];
        let lambda: Vec<BigRational> = self
            .u_inv
            .column(i)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let d = &self.diag[i];
        let x: Vec<BigRational> = self
            .v
            .column(i)
            .into_iter()
            .map(|c| BigRational::new(c, d.clone()))
            .collect();
        AmbientPoint::torus(lambda, x)
    }

    /// Compact lift of a torsion point x of the torus: splits x into kernel
    /// and coimage parts, demands that tau(x_coim) is an integral character
    /// (that is the image of the compact sub-2-group), and returns the
    /// T_ker coordinates (in the Pi_ker basis, mod 1) together with the
    /// finite-part coordinates and the ambient representative.
    pub fn lift_torus_point(&self, x: &[BigRational]) -> Result<TorusCompactElem> {
        let r = self.rank();
        if x.len() != r {
            return Err(Error::DimensionMismatch(format!(
                "torus point has {} coordinates, rank is {r}",
                x.len()
            )));
        }
        let w = self.v_inv_rat.mul_vec(x);
        let mut w_coim = w.clone();
        for item in w_coim.iter_mut().skip(self.rho) {
            *item = BigRational::zero();
        }
        let x_coim = RatMatrix::from_int(&self.v).mul_vec(&w_coim);
        let tau_rat = RatMatrix::from_int(&self.tau);
        let lambda = tau_rat.mul_vec(&x_coim);
        if !lambda.iter().all(|c| c.denom().is_one()) {
            return Err(Error::TorusLiftOutsideCompact(format!(
                "tau(x_coim) = ({}) is not an integral character",
                lambda
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        let lambda_int: Vec<BigInt> = lambda.iter().map(|c| c.to_integer()).collect();
        // finite coordinates: U * lambda must be supported on the kept block
        let ul = self.u.mul_vec(&lambda_int);
        for (i, v) in ul.iter().enumerate() {
            let in_block = i < self.rho;
            if !in_block && !v.is_zero() {
                return Err(Error::TorusLiftOutsideCompact(
                    "character escapes the saturated image".into(),
                ));
            }
        }
        let fin: AbElem = self
            .kept
            .iter()
            .map(|&i| ul[i].mod_floor(&self.diag[i]))
            .collect();
        // T_ker coordinates: trailing V-coordinates mod 1
        let t_ker: Vec<BigRational> = (self.rho..r).map(|i| frac_mod_one(&w[i])).collect();
        // ambient representative of the lift: (lambda, x_ker + x_coim) with
        // the same x the caller provided
        let rep = AmbientPoint::torus(
            lambda_int
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
            x.to_vec(),
        );
        Ok(TorusCompactElem { t_ker, fin, rep })
    }
}

fn frac_mod_one(x: &BigRational) -> BigRational {
    let f = x.floor();
    x - f
}

/// A point of the maximal compact subgroup T_ker + finite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusCompactElem {
    /// coordinates in the Pi_ker basis, reduced mod 1
    pub t_ker: Vec<BigRational>,
    /// coordinates in the finite part
    pub fin: AbElem,
    /// ambient representative
    pub rep: AmbientPoint,
}

/// Structured description of the centre: noncompact vector directions, free
/// discrete directions, a compact torus, and a finite group with its
/// quadratic form, plus the exact evaluator on ambient points.
#[derive(Clone)]
pub struct StructuredCentre {
    pub vector_dim: usize,
    pub discrete_free_rank: usize,
    pub torus_dim: usize,
    pub finite: FiniteAbGroup,
    pub q_finite: QForm,
    /// ambient representatives of the finite generators
    pub gen_reps: Vec<AmbientPoint>,
    pub evaluator: Evaluator,
    pub torus_decomp: Option<TorusDecomp>,
}

impl StructuredCentre {
    pub fn is_finite(&self) -> bool {
        self.vector_dim == 0 && self.discrete_free_rank == 0 && self.torus_dim == 0
    }

    /// Evaluate q at an element of the finite part through its ambient
    /// representative.
    pub fn eval_finite_elem(&self, elem: &AbElem) -> Result<QZElem> {
        let elem = self.finite.reduce(elem)?;
        let rank = self.evaluator.torus.as_ref().map(|t| t.rank).unwrap_or(0);
        let shapes: Vec<usize> = self
            .evaluator
            .simple_forms
            .iter()
            .map(|f| f.group().rank())
            .collect();
        let mut p = AmbientPoint::zero(rank, &shapes);
        for (c, rep) in elem.iter().zip(&self.gen_reps) {
            p = p.add(&rep.scale(c));
        }
        self.evaluator.eval(&p)
    }
}

/// Build the finite quadratic form from generator representatives through
/// the evaluator.
pub fn form_from_reps(
    finite: &FiniteAbGroup,
    reps: &[AmbientPoint],
    evaluator: &Evaluator,
) -> Result<QForm> {
    let m = finite.rank();
    let mut diag = Vec::with_capacity(m);
    for rep in reps {
        diag.push(evaluator.eval(rep)?);
    }
    let mut offdiag = vec![vec![QZElem::zero(); m]; m];
    for i in 0..m {
        for j in 0..i {
            let s = evaluator.sigma(&reps[i], &reps[j])?;
            offdiag[i][j] = s.clone();
            offdiag[j][i] = s;
        }
    }
    QForm::new(finite.clone(), diag, offdiag)
}

/// The structured centre of a categorical torus.
pub fn torus_pi0(tl: &TorusLevel) -> Result<StructuredCentre> {
    let decomp = TorusDecomp::new(tl);
    let finite = decomp.finite_group();
    let gen_reps: Vec<AmbientPoint> = (0..finite.rank())
        .map(|k| decomp.finite_gen_rep(k))
        .collect();
    let evaluator = Evaluator {
        torus: Some(tl.clone()),
        simple_forms: vec![],
    };
    let q_finite = form_from_reps(&finite, &gen_reps, &evaluator)?;
    Ok(StructuredCentre {
        vector_dim: decomp.rho,
        discrete_free_rank: tl.rank - decomp.rho,
        torus_dim: tl.rank - decomp.rho,
        finite,
        q_finite,
        gen_reps,
        evaluator,
        torus_decomp: Some(decomp),
    })
}

/// The maximal compact sub-2-group: the torus dimension plus the finite part
/// with its form. The cross-pairing between T_ker and the finite part
/// vanishes (asserted by tests through the evaluator), so the form splits.
pub fn max_compact(sc: &StructuredCentre) -> (usize, FiniteAbGroup, QForm) {
    (sc.torus_dim, sc.finite.clone(), sc.q_finite.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;
    use crate::qform::{name_form, BraidedName};
    use crate::qz::qz;
    use num_traits::Signed;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn tl(rank: usize, j: Vec<Vec<i64>>) -> TorusLevel {
        TorusLevel::new(rank, IntMatrix::from_rows(j)).unwrap()
    }

    #[test]
    fn rank1_level_zero() {
        // J = [[0]]: everything is flat; free character direction and a
        // compact torus direction, trivial finite part
        let sc = torus_pi0(&tl(1, vec![vec![0]])).unwrap();
        assert_eq!(sc.vector_dim, 0);
        assert_eq!(sc.discrete_free_rank, 1);
        assert_eq!(sc.torus_dim, 1);
        assert!(sc.finite.is_trivial());
        assert!(!sc.is_finite());
        // q restricts trivially to the compact part (lambda = 0), while the
        // character/torus pairing stays visible in the braiding
        let t = tl(1, vec![vec![0]]);
        for d in 1..8i64 {
            assert!(torus_q(&t, &[rat(0, 1)], &[rat(1, d)]).unwrap().is_zero());
        }
        assert_eq!(
            torus_braiding(
                &t,
                (&[rat(2, 1)], &[rat(0, 1)]),
                (&[rat(0, 1)], &[rat(1, 7)])
            )
            .unwrap(),
            qz(2, 7)
        );
        // all-zero inputs braid to 0
        assert!(torus_braiding(
            &t,
            (&[rat(0, 1)], &[rat(0, 1)]),
            (&[rat(0, 1)], &[rat(0, 1)])
        )
        .unwrap()
        .is_zero());
        // J = [[-1]]: beta((1,0),(0,1/2)) = lambda(x') = 1/2, no J term
        let t1 = tl(1, vec![vec![-1]]);
        assert_eq!(
            torus_braiding(
                &t1,
                (&[rat(1, 1)], &[rat(0, 1)]),
                (&[rat(0, 1)], &[rat(1, 2)])
            )
            .unwrap(),
            qz(1, 2)
        );
        // dimension mismatch is an error
        assert!(torus_braiding(&t1, (&[], &[]), (&[rat(0, 1)], &[rat(1, 2)])).is_err());
    }

    #[test]
    fn rank1_level_one_is_semion() {
        // J = [[-1]]: I = [[2]], finite part Z/2 with q = 1/4
        let sc = torus_pi0(&tl(1, vec![vec![-1]])).unwrap();
        assert_eq!(sc.vector_dim, 1);
        assert_eq!(sc.discrete_free_rank, 0);
        assert_eq!(sc.torus_dim, 0);
        assert_eq!(sc.finite.invariant_factors(), &[BigInt::from(2)]);
        assert_eq!(name_form(&sc.q_finite), BraidedName::Semi);
        // cross-check by evaluating at the point (lambda=1, x=1/2)
        let t = tl(1, vec![vec![-1]]);
        assert_eq!(torus_q(&t, &[rat(1, 1)], &[rat(1, 2)]).unwrap(), qz(1, 4));
    }

    #[test]
    fn rank1_general_level() {
        // J = [[-k]]: finite part Z/2k with q(l) = l^2/(4k), checked by an
        // exhaustive evaluator sweep
        for k in 1..=4i64 {
            let t = tl(1, vec![vec![-k]]);
            let sc = torus_pi0(&t).unwrap();
            assert_eq!(sc.finite.invariant_factors(), &[BigInt::from(2 * k)]);
            for l in 0..(2 * k) {
                let got = sc.eval_finite_elem(&vec![BigInt::from(l)]).unwrap();
                assert_eq!(got, qz(l * l, 4 * k), "k={k} l={l}");
                // the same value from the raw evaluator at (l, l/2k)
                let direct = torus_q(&t, &[rat(l, 1)], &[rat(l, 2 * k)]).unwrap();
                assert_eq!(direct, qz(l * l, 4 * k));
            }
            assert!(sc.q_finite.is_quadratic().unwrap());
        }
    }

    #[test]
    fn max_compact_examples() {
        let (dim, fin, q) = max_compact(&torus_pi0(&tl(1, vec![vec![0]])).unwrap());
        assert_eq!(dim, 1);
        assert!(fin.is_trivial());
        assert!(q.diag().is_empty());

        let (dim, fin, q) = max_compact(&torus_pi0(&tl(1, vec![vec![-2]])).unwrap());
        assert_eq!(dim, 0);
        assert_eq!(fin.invariant_factors(), &[BigInt::from(4)]);
        assert_eq!(q.eval(&vec![BigInt::one()]).unwrap(), qz(1, 8));

        // rank 2 block: one kernel direction, one semion block
        let (dim, fin, q) = max_compact(&torus_pi0(&tl(2, vec![vec![-1, 0], vec![0, 0]])).unwrap());
        assert_eq!(dim, 1);
        assert_eq!(fin.invariant_factors(), &[BigInt::from(2)]);
        assert_eq!(q.eval(&vec![BigInt::one()]).unwrap(), qz(1, 4));
    }

    #[test]
    fn evaluator_invariant_under_lattice_shift() {
        // q(p + (tau pi, pi)) = q(p) for random rational points p and
        // random pi in Pi
        let mut rng = StdRng::seed_from_u64(7);
        let js = [
            tl(1, vec![vec![-3]]),
            tl(2, vec![vec![-1, 2], vec![0, 1]]),
            tl(3, vec![vec![0, 1, -2], vec![-1, 2, 0], vec![3, 0, 0]]),
        ];
        for t in &js {
            let tau = t.level_form();
            for _ in 0..34 {
                let lambda: Vec<BigRational> =
                    (0..t.rank).map(|_| rat(rng.gen_range(-6..6), 1)).collect();
                let x: Vec<BigRational> = (0..t.rank)
                    .map(|_| rat(rng.gen_range(-12..12), rng.gen_range(1..8)))
                    .collect();
                let pi: Vec<BigInt> = (0..t.rank)
                    .map(|_| BigInt::from(rng.gen_range(-4..4i64)))
                    .collect();
                let tau_pi = tau.mul_vec(&pi);
                let lambda2: Vec<BigRational> = lambda
                    .iter()
                    .zip(&tau_pi)
                    .map(|(a, b)| a + BigRational::from_integer(b.clone()))
                    .collect();
                let x2: Vec<BigRational> = x
                    .iter()
                    .zip(&pi)
                    .map(|(a, b)| a + BigRational::from_integer(b.clone()))
                    .collect();
                assert_eq!(
                    torus_q(t, &lambda, &x).unwrap(),
                    torus_q(t, &lambda2, &x2).unwrap()
                );
            }
        }
    }

    #[test]
    fn self_braiding_is_q_and_polarisation() {
        let mut rng = StdRng::seed_from_u64(11);
        let t = tl(2, vec![vec![-2, 1], vec![0, -1]]);
        for _ in 0..50 {
            let mk = |rng: &mut StdRng| {
                (
                    (0..2)
                        .map(|_| rat(rng.gen_range(-5..5), 1))
                        .collect::<Vec<_>>(),
                    (0..2)
                        .map(|_| rat(rng.gen_range(-10..10), rng.gen_range(1..6)))
                        .collect::<Vec<_>>(),
                )
            };
            let p = mk(&mut rng);
            let p2 = mk(&mut rng);
            // beta(p,p) = q(p)
            assert_eq!(
                torus_braiding(&t, (&p.0, &p.1), (&p.0, &p.1)).unwrap(),
                torus_q(&t, &p.0, &p.1).unwrap()
            );
            // sigma(p,p') = beta(p,p') + beta(p',p)
            let sum_l: Vec<BigRational> = p.0.iter().zip(&p2.0).map(|(a, b)| a + b).collect();
            let sum_x: Vec<BigRational> = p.1.iter().zip(&p2.1).map(|(a, b)| a + b).collect();
            let sigma = torus_q(&t, &sum_l, &sum_x)
                .unwrap()
                .sub(&torus_q(&t, &p.0, &p.1).unwrap())
                .sub(&torus_q(&t, &p2.0, &p2.1).unwrap());
            let beta_sum = torus_braiding(&t, (&p.0, &p.1), (&p2.0, &p2.1))
                .unwrap()
                .add(&torus_braiding(&t, (&p2.0, &p2.1), (&p.0, &p.1)).unwrap());
            assert_eq!(sigma, beta_sum);
        }
    }

    #[test]
    fn finite_part_order_matches_det() {
        // for full-rank tau the finite part has order |det tau| and the
        // split is vector_dim = rank with no compact torus
        for t in [
            tl(1, vec![vec![-1]]),
            tl(2, vec![vec![-1, 1], vec![0, -2]]),
            tl(2, vec![vec![-2, 3], vec![1, -4]]),
        ] {
            let tau = t.level_form();
            let det = tau.det().abs();
            if det.is_zero() {
                continue;
            }
            let sc = torus_pi0(&t).unwrap();
            assert_eq!(sc.finite.order(), det);
            assert_eq!(sc.vector_dim, t.rank);
            assert_eq!(sc.torus_dim, 0);
            assert_eq!(sc.discrete_free_rank, 0);
        }
    }

    #[test]
    fn lift_torsion_points() {
        // J = [[-2]]: tau = [4]; x = 1/4 lifts to the finite generator
        let d = TorusDecomp::new(&tl(1, vec![vec![-2]]));
        let lift = d.lift_torus_point(&[rat(1, 4)]).unwrap();
        assert!(lift.t_ker.is_empty());
        assert_eq!(lift.fin, vec![BigInt::one()]);
        // x = 1/3: tau(x) = 4/3 not integral, so not in the compact image
        assert!(matches!(
            d.lift_torus_point(&[rat(1, 3)]),
            Err(Error::TorusLiftOutsideCompact(_))
        ));
        // J = [[0]]: tau = 0, any torsion point lives in T_ker
        let d = TorusDecomp::new(&tl(1, vec![vec![0]]));
        let lift = d.lift_torus_point(&[rat(1, 2)]).unwrap();
        assert_eq!(lift.t_ker, vec![rat(1, 2)]);
        assert!(lift.fin.is_empty());
    }

    #[test]
    fn t_ker_pairs_trivially_with_compact() {
        // literal evaluator check of the cross-pairing split on a
        // degenerate block level
        let t = tl(2, vec![vec![-1, 0], vec![0, 0]]);
        let sc = torus_pi0(&t).unwrap();
        let decomp = sc.torus_decomp.as_ref().unwrap();
        // the kernel direction as an ambient point
        let ker_col = decomp.v.column(1);
        for denom in 1..6i64 {
            let tk = AmbientPoint::torus(
                vec![BigRational::zero(); 2],
                ker_col
                    .iter()
                    .map(|c| BigRational::new(c.clone(), BigInt::from(denom)))
                    .collect(),
            );
            // q vanishes on T_ker
            assert!(sc.evaluator.eval(&tk).unwrap().is_zero());
            // sigma(T_ker, finite gen) = 0
            for rep in &sc.gen_reps {
                assert!(sc.evaluator.sigma(&tk, rep).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn invariance_under_unimodular_basis_change() {
        // the observable outputs (dims, invariant factors, q multiset) are
        // unchanged by J -> P^t J P for unimodular P
        let mut rng = StdRng::seed_from_u64(23);
        let base = tl(3, vec![vec![-2, 1, 0], vec![0, 0, 3], vec![1, -1, 0]]);
        let sc0 = torus_pi0(&base).unwrap();
        let mut multiset0: Vec<QZElem> = sc0
            .finite
            .elements(10_000)
            .unwrap()
            .iter()
            .map(|e| sc0.q_finite.eval(e).unwrap())
            .collect();
        multiset0.sort();
        for _ in 0..6 {
            // random unimodular P from elementary operations
            let mut p = IntMatrix::identity(3);
            for _ in 0..8 {
                let i = rng.gen_range(0..3);
                let mut j = rng.gen_range(0..3);
                if i == j {
                    j = (j + 1) % 3;
                }
                let c = BigInt::from(rng.gen_range(-2..3i64));
                // col_i += c * col_j
                for row in 0..3 {
                    let v = p.at(row, i) + &c * p.at(row, j);
                    p.set(row, i, v);
                }
            }
            assert_eq!(p.det().abs(), BigInt::one());
            let j2 = p.transpose().mul(&base.j).mul(&p);
            let sc = torus_pi0(&TorusLevel::new(3, j2).unwrap()).unwrap();
            assert_eq!(sc.vector_dim, sc0.vector_dim);
            assert_eq!(sc.discrete_free_rank, sc0.discrete_free_rank);
            assert_eq!(sc.torus_dim, sc0.torus_dim);
            assert_eq!(
                sc.finite.invariant_factors(),
                sc0.finite.invariant_factors()
            );
            let mut multiset: Vec<QZElem> = sc
                .finite
                .elements(10_000)
                .unwrap()
                .iter()
                .map(|e| sc.q_finite.eval(e).unwrap())
                .collect();
            multiset.sort();
            assert_eq!(multiset, multiset0);
        }
    }

    #[test]
    fn rejects_non_square_level() {
        assert!(TorusLevel::new(2, IntMatrix::from_rows(vec![vec![1, 2, 3]])).is_err());
    }
}
