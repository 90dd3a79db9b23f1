//! Expected cohomology results as data, and their comparison with the engine.
//!
//! Each expectation lives in `fixtures/<id>.json`. Generators are given as
//! families: a seed multivector, optionally multiplied by the powers of a
//! polynomial or by all monomials in some variables, and optionally
//! bracketed with a fixed multivector afterwards. The family elements must
//! be cocycles and must span `H^q_d` modulo coboundaries in every degree.
//! The frozen `dims` grid is a plain count of family elements per degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{modular_vector_field, schouten, Monomial, MultiVector, Polynomial, Rational, Var};
use crate::cohomology::{algebra_table, coboundary_witness, CohomologyTable};
use crate::complex::{differential_matrix, poisson_differential, GradedBasis};
use crate::error::{Error, Result};
use crate::expr::{format_multivector, parse_multivector};
use crate::lie::AlgebraKind;
use crate::linalg::Echelon;

const FIXTURES: [(&str, &str); 11] = [
    (
        "open_book_tau_1",
        include_str!("../fixtures/open_book_tau_1.json"),
    ),
    (
        "open_book_tau_1_3",
        include_str!("../fixtures/open_book_tau_1_3.json"),
    ),
    (
        "open_book_tau_3_5",
        include_str!("../fixtures/open_book_tau_3_5.json"),
    ),
    ("hyperbolic_2_3", include_str!("../fixtures/hyperbolic_2_3.json")),
    ("spiral", include_str!("../fixtures/spiral.json")),
    ("semi_open_book", include_str!("../fixtures/semi_open_book.json")),
    ("heisenberg", include_str!("../fixtures/heisenberg.json")),
    ("aff_x_r", include_str!("../fixtures/aff_x_r.json")),
    ("euclidean", include_str!("../fixtures/euclidean.json")),
    ("so3_vanishing", include_str!("../fixtures/so3_vanishing.json")),
    ("sl2_vanishing", include_str!("../fixtures/sl2_vanishing.json")),
];

/// Ids of all encoded expectations.
pub fn ids() -> Vec<&'static str> {
    FIXTURES.iter().map(|(id, _)| *id).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Multiplier {
    /// `base^n`, `n >= 0`; `base_degree` is the degree of `base`.
    Powers { powers: String, base_degree: u32 },
    /// Every monomial in `monomials` of degree at least `from`.
    Monomials { monomials: Vec<String>, from: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub q: usize,
    pub seed: String,
    /// Polynomial degree of the element built from a degree-0 multiplier.
    pub degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<Multiplier>,
    /// Elements are `[seed * m, bracket]` when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<String>,
}

/// Whether the statement concerns formal power series or is the polynomial
/// shadow of a statement about smooth coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficients {
    Formal,
    SmoothShadow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedResult {
    pub id: String,
    pub algebra: String,
    pub tau: Option<String>,
    pub coefficients: Coefficients,
    pub statement: String,
    /// Degree range covered by `dims`.
    pub dmax: u32,
    /// Smallest `dmax` at which every listed family element and coboundary is in range.
    pub min_dmax: u32,
    pub totals: Option<[usize; 4]>,
    pub stable: Option<bool>,
    pub families: Vec<Family>,
    pub coboundaries: Vec<String>,
    pub dims_oracle: String,
    /// `dims[q][d]`, for `d = 0..=dmax`.
    pub dims: [Vec<usize>; 4],
}

impl ExpectedResult {
    pub fn kind(&self) -> Result<AlgebraKind> {
        AlgebraKind::from_name(&self.algebra, self.tau.as_deref())
    }

    /// Family elements of polynomial degree at most `dmax`, grouped by `(q, d)`.
    pub fn family_elements(&self, dmax: u32) -> Result<BTreeMap<(usize, u32), Vec<MultiVector>>> {
        let bad = |message: String| Error::Fixture {
            id: self.id.clone(),
            message,
        };
        let mut out: BTreeMap<(usize, u32), Vec<MultiVector>> = BTreeMap::new();
        for fam in &self.families {
            let seed = parse_multivector(&fam.seed).map_err(|e| bad(e.to_string()))?;
            let bracket = match &fam.bracket {
                Some(b) => Some(parse_multivector(b).map_err(|e| bad(e.to_string()))?),
                None => None,
            };
            let limit = (dmax as i64 - fam.degree.min(0)).max(0) as u32;
            for (mdeg, m) in multipliers(fam.multiplier.as_ref(), limit).map_err(|e| bad(e.to_string()))? {
                let d = fam.degree + mdeg as i64;
                if d < 0 || d > dmax as i64 {
                    continue;
                }
                let mut elem = seed.mul_function(&m);
                if let Some(b) = &bracket {
                    elem = schouten(&elem, b);
                }
                if elem.degree() != fam.q || !elem.is_homogeneous_of(d as u32) || elem.is_zero() {
                    return Err(bad(format!(
                        "family `{}` produced {} instead of a nonzero element of degree ({}, {d})",
                        fam.seed,
                        format_multivector(&elem),
                        fam.q
                    )));
                }
                out.entry((fam.q, d as u32)).or_default().push(elem);
            }
        }
        Ok(out)
    }

    /// Second count of the family grid, from the elements themselves.
    pub fn enumerated_dims(&self, dmax: u32) -> Result<[Vec<usize>; 4]> {
        let mut grid: [Vec<usize>; 4] = std::array::from_fn(|_| vec![0; dmax as usize + 1]);
        for ((q, d), elems) in self.family_elements(dmax)? {
            grid[q][d as usize] += elems.len();
        }
        Ok(grid)
    }
}

fn multipliers(mult: Option<&Multiplier>, limit: u32) -> Result<Vec<(u32, Polynomial)>> {
    Ok(match mult {
        None => vec![(0, Polynomial::one())],
        Some(Multiplier::Powers { powers, base_degree }) => {
            let base = crate::expr::parse_polynomial(powers)?;
            if !base.is_homogeneous_of(*base_degree) || *base_degree == 0 {
                return Err(Error::Contract(format!(
                    "`{powers}` is not homogeneous of positive degree {base_degree}"
                )));
            }
            (0..=limit / base_degree)
                .map(|n| (n * base_degree, base.pow(n)))
                .collect()
        }
        Some(Multiplier::Monomials { monomials, from }) => {
            let vars: Vec<Var> = monomials
                .iter()
                .map(|v| match v.as_str() {
                    "x" => Ok(Var::X),
                    "y" => Ok(Var::Y),
                    "z" => Ok(Var::Z),
                    other => Err(Error::Contract(format!("unknown variable `{other}`"))),
                })
                .collect::<Result<_>>()?;
            let mut out = Vec::new();
            for k in *from..=limit {
                for m in Monomial::of_degree(k) {
                    if Var::ALL.iter().all(|v| vars.contains(v) || m.exp(*v) == 0) {
                        out.push((k, Polynomial::from(m)));
                    }
                }
            }
            out
        }
    })
}

pub fn expected_table(id: &str) -> Result<ExpectedResult> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(k, _)| *k == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let fixture: ExpectedResult = serde_json::from_str(text).map_err(|e| Error::Fixture {
        id: id.to_string(),
        message: e.to_string(),
    })?;
    if fixture.id != id
        || fixture
            .dims
            .iter()
            .any(|row| row.len() != fixture.dmax as usize + 1)
    {
        return Err(Error::Fixture {
            id: id.to_string(),
            message: "id or grid shape does not match".into(),
        });
    }
    Ok(fixture)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub q: Option<usize>,
    pub d: Option<u32>,
    pub check: String,
    pub expected: String,
    pub computed: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q, self.d) {
            (Some(q), Some(d)) => write!(f, "({q}, {d}) ")?,
            (Some(q), None) => write!(f, "(q = {q}) ")?,
            _ => {}
        }
        write!(
            f,
            "{}: expected {}, computed {}",
            self.check, self.expected, self.computed
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub pass: bool,
    pub dmax: u32,
    pub totals: Option<[usize; 4]>,
    pub mismatches: Vec<Mismatch>,
}

impl Report {
    fn new(id: &str, dmax: u32) -> Self {
        Report {
            id: id.to_string(),
            pass: true,
            dmax,
            totals: None,
            mismatches: Vec::new(),
        }
    }

    fn fail(&mut self, q: Option<usize>, d: Option<u32>, check: &str, expected: String, computed: String) {
        self.pass = false;
        self.mismatches.push(Mismatch {
            q,
            d,
            check: check.to_string(),
            expected,
            computed,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (dmax {}): {}",
            self.id,
            self.dmax,
            if self.pass { "pass" } else { "FAIL" }
        )?;
        if let Some(t) = self.totals {
            write!(f, ", totals ({}, {}, {}, {})", t[0], t[1], t[2], t[3])?;
        }
        for m in &self.mismatches {
            write!(f, "\n  {m}")?;
        }
        Ok(())
    }
}

/// Echelon of `H^q_d` classes: vectors reduced modulo the image.
fn class_span(image: &Echelon, basis: &GradedBasis, vs: &[MultiVector]) -> Echelon {
    let mut span = Echelon::new();
    for v in vs {
        let c = basis.coords(v).expect("homogeneous element");
        span.insert(image.reduce(&c));
    }
    span
}

fn check_cell_spans(
    report: &mut Report,
    pi: &MultiVector,
    table: &CohomologyTable,
    elements: &BTreeMap<(usize, u32), Vec<MultiVector>>,
) -> Result<()> {
    for q in 0..=3 {
        for d in 0..=table.dmax {
            let cell = table.cell(q, d);
            let expected = elements.get(&(q, d)).map(Vec::as_slice).unwrap_or(&[]);
            if expected.is_empty() && cell.dim_h == 0 {
                continue;
            }
            for e in expected {
                if !poisson_differential(pi, e).is_zero() {
                    report.fail(
                        Some(q),
                        Some(d),
                        "cocycle",
                        "closed".into(),
                        format!("d({}) != 0", format_multivector(e)),
                    );
                }
            }
            let basis = GradedBasis::new(q, d);
            let mut image = Echelon::new();
            if q > 0 {
                for c in differential_matrix(pi, q - 1, d)?.matrix.columns() {
                    image.insert(c.clone());
                }
            }
            let want = class_span(&image, &basis, expected);
            let got = class_span(&image, &basis, &cell.representatives);
            if want.rank() != expected.len() {
                report.fail(
                    Some(q),
                    Some(d),
                    "independent classes",
                    expected.len().to_string(),
                    want.rank().to_string(),
                );
            }
            if want.rref() != got.rref() {
                let show =
                    |vs: &[MultiVector]| vs.iter().map(format_multivector).collect::<Vec<_>>().join(", ");
                report.fail(
                    Some(q),
                    Some(d),
                    "class span",
                    format!("[{}]", show(expected)),
                    format!("[{}]", show(&cell.representatives)),
                );
            }
        }
    }
    Ok(())
}

/// Compares the engine with the expectation `id` on degrees `0..=dmax`.
pub fn verify(id: &str, dmax: u32) -> Result<Report> {
    let exp = expected_table(id)?;
    let mut report = Report::new(id, dmax);
    let kind = exp.kind()?;
    let pi = kind.poisson_bivector();
    let table = algebra_table(&kind, dmax)?;
    report.totals = Some(table.totals);
    if dmax < exp.min_dmax {
        report.fail(
            None,
            None,
            "degree range",
            format!("dmax >= {}", exp.min_dmax),
            dmax.to_string(),
        );
    }
    // frozen grid, on the degrees both cover
    for q in 0..=3 {
        for d in 0..=dmax.min(exp.dmax) {
            let (want, got) = (exp.dims[q][d as usize], table.cell(q, d).dim_h);
            if want != got {
                report.fail(Some(q), Some(d), "dim", want.to_string(), got.to_string());
            }
        }
    }
    let elements = exp.family_elements(dmax)?;
    check_cell_spans(&mut report, &pi, &table, &elements)?;
    if dmax >= exp.min_dmax {
        if let Some(t) = exp.totals {
            if t != table.totals {
                report.fail(
                    None,
                    None,
                    "totals",
                    format!("{t:?}"),
                    format!("{:?}", table.totals),
                );
            }
        }
        if let Some(s) = exp.stable {
            // the flag needs three empty top degrees to be meaningful
            if dmax >= exp.min_dmax + 3 && s != table.stable {
                report.fail(None, None, "stable", s.to_string(), table.stable.to_string());
            }
        }
    }
    for text in &exp.coboundaries {
        let target = parse_multivector(text)?;
        let d = target.homogeneous_degree().unwrap_or(0);
        if d > dmax {
            continue;
        }
        match coboundary_witness(&pi, &target)? {
            Some(w) if poisson_differential(&pi, &w) == target => {}
            _ => report.fail(
                Some(target.degree()),
                Some(d),
                "coboundary",
                text.clone(),
                "no primitive".into(),
            ),
        }
    }
    Ok(report)
}

/// Family shapes accepted by [`deformation_identity_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformationFamily {
    /// `z dx^dy + [(g1 + z g2) dz, dx^dy]`, `g1, g2` in `x, y` vanishing at 0.
    Heisenberg,
    /// `T^dz + f(x^2+y^2) E^dz + g(z) dx^dy`, with `f` written in the variable `x`.
    Euclidean,
}

impl DeformationFamily {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "heisenberg" => Ok(DeformationFamily::Heisenberg),
            "euclidean" => Ok(DeformationFamily::Euclidean),
            other => Err(Error::InvalidParameter(format!(
                "no deformation family `{other}`"
            ))),
        }
    }
}

fn depends_only_on(p: &Polynomial, vars: &[Var]) -> bool {
    Var::ALL.iter().all(|v| vars.contains(v) || p.is_free_of(*v))
}

/// The deformed bivector of a family.
pub fn deformed_bivector(family: DeformationFamily, a: &Polynomial, b: &Polynomial) -> Result<MultiVector> {
    let dz = MultiVector::d(Var::Z);
    let dxdy = MultiVector::d(Var::X).wedge(&MultiVector::d(Var::Y));
    match family {
        DeformationFamily::Heisenberg => {
            let origin = [Rational::zero(), Rational::zero(), Rational::zero()];
            for g in [a, b] {
                if !depends_only_on(g, &[Var::X, Var::Y]) || !g.evaluate(&origin).is_zero() {
                    return Err(Error::Contract(
                        "g1, g2 must be polynomials in x, y vanishing at 0".into(),
                    ));
                }
            }
            let h = a + &(&Polynomial::z() * b);
            let w = schouten(&dz.mul_function(&h), &dxdy);
            Ok(&AlgebraKind::Heisenberg.poisson_bivector() + &w)
        }
        DeformationFamily::Euclidean => {
            if !depends_only_on(a, &[Var::X]) || !depends_only_on(b, &[Var::Z]) {
                return Err(Error::Contract(
                    "f must be written in x alone and g in z alone".into(),
                ));
            }
            let u = Polynomial::x().pow(2) + Polynomial::y().pow(2);
            let f_u = a.compose(&[u, Polynomial::y(), Polynomial::z()]);
            let e_dz = MultiVector::euler_planar().wedge(&dz).mul_function(&f_u);
            Ok(&(&AlgebraKind::Euclidean.poisson_bivector() + &e_dz) + &dxdy.mul_function(b))
        }
    }
}

/// Closed form of `[π_def, π_def]` for a family.
pub fn deformation_closed_form(family: DeformationFamily, a: &Polynomial, b: &Polynomial) -> MultiVector {
    let coeff = match family {
        DeformationFamily::Heisenberg => {
            // 2(g1_x g2_y - g1_y g2_x); the other sign contradicts the euclidean identity
            // under any single bracket convention, since [W, W] is quadratic in W
            let t = &a.partial(Var::X) * &b.partial(Var::Y) - &a.partial(Var::Y) * &b.partial(Var::X);
            t.scale(&Rational::from_integer(2.into()))
        }
        DeformationFamily::Euclidean => {
            // f(u) + u f'(u) at u = x^2 + y^2
            let u = Polynomial::x().pow(2) + Polynomial::y().pow(2);
            let inner = a + &(&Polynomial::x() * &a.partial(Var::X));
            let inner = inner.compose(&[u, Polynomial::y(), Polynomial::z()]);
            (&inner * b).scale(&Rational::from_integer(4.into()))
        }
    };
    MultiVector::trivector(coeff)
}

/// `[π_def, π_def] −` closed form; zero when the identity holds.
pub fn deformation_identity_check(
    family: DeformationFamily,
    a: &Polynomial,
    b: &Polynomial,
) -> Result<MultiVector> {
    let pi = deformed_bivector(family, a, b)?;
    Ok(&schouten(&pi, &pi) - &deformation_closed_form(family, a, b))
}

/// Expected modular vector field of each registry kind.
pub fn expected_modular_field(kind: &AlgebraKind) -> MultiVector {
    let dz = MultiVector::d(Var::Z);
    let one = Rational::from_integer(1.into());
    match kind {
        AlgebraKind::AffXR => -MultiVector::d(Var::Y),
        AlgebraKind::Book(b) => dz.scale(&-(one + b.tau())),
        AlgebraKind::Spiral(t) => dz.scale(&-(t * Rational::from_integer(2.into()))),
        AlgebraKind::SemiOpenBook => dz.scale(&Rational::from_integer((-2).into())),
        _ => MultiVector::zero(1),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularReport {
    pub algebra: String,
    pub field: String,
    pub expected: String,
    pub cocycle: bool,
    pub unimodular: bool,
    pub pass: bool,
}

impl fmt::Display for ModularReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: modular field {} (expected {}), cocycle: {}, class {}: {}",
            self.algebra,
            self.field,
            self.expected,
            self.cocycle,
            if self.unimodular { "zero" } else { "nonzero" },
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// Modular field of the registry bivector, its cocycle property and whether its class vanishes.
pub fn modular_class_check(kind: &AlgebraKind) -> Result<ModularReport> {
    let pi = kind.poisson_bivector();
    let field = modular_vector_field(&pi)?;
    let expected = expected_modular_field(kind);
    let cocycle = poisson_differential(&pi, &field).is_zero();
    let unimodular = field.is_zero() || coboundary_witness(&pi, &field)?.is_some();
    Ok(ModularReport {
        algebra: kind.to_string(),
        field: format_multivector(&field),
        expected: format_multivector(&expected),
        cocycle,
        unimodular,
        pass: cocycle && field == expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::expr::parse_polynomial;

    #[test]
    fn every_fixture_loads_and_counts_agree() {
        for id in ids() {
            let exp = expected_table(id).unwrap();
            assert_eq!(exp.enumerated_dims(exp.dmax).unwrap(), exp.dims, "{id}");
            exp.kind().unwrap();
        }
        assert!(matches!(expected_table("nope"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn open_book_tau_1_expectation() {
        let exp = expected_table("open_book_tau_1").unwrap();
        assert_eq!(exp.totals, Some([1, 4, 3, 0]));
        let els = exp.family_elements(10).unwrap();
        let h1_1: Vec<String> = els[&(1, 1)].iter().map(format_multivector).collect();
        assert_eq!(h1_1, ["y*dx", "x*dy", "y*dy"]);
        assert_eq!(els[&(1, 0)], [parse_multivector("dz").unwrap()]);
    }

    #[test]
    fn small_verifications_pass() {
        for (id, dmax) in [
            ("open_book_tau_1_3", 6),
            ("semi_open_book", 5),
            ("so3_vanishing", 4),
        ] {
            let r = verify(id, dmax).unwrap();
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn too_small_range_is_reported() {
        let r = verify("open_book_tau_1_3", 2).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn deformation_examples() {
        let p = |s: &str| parse_polynomial(s).unwrap();
        let h = DeformationFamily::Heisenberg;
        assert_eq!(
            deformation_closed_form(h, &p("x^2"), &p("y^2")),
            MultiVector::trivector(p("8*x*y"))
        );
        assert!(deformation_identity_check(h, &p("x^2"), &p("y^2"))
            .unwrap()
            .is_zero());
        let g = p("x*y + y^3");
        assert!(deformation_closed_form(h, &g, &g).is_zero());
        assert!(deformation_identity_check(h, &g, &g).unwrap().is_zero());
        let e = DeformationFamily::Euclidean;
        assert_eq!(
            deformation_closed_form(e, &p("x"), &p("z")),
            MultiVector::trivector(p("8*x^2*z + 8*y^2*z"))
        );
        assert!(deformation_identity_check(e, &p("x"), &p("z")).unwrap().is_zero());
        assert!(deformation_identity_check(h, &p("x + 1"), &p("y")).is_err());
    }

    #[test]
    fn modular_reports() {
        for kind in AlgebraKind::samples() {
            let r = modular_class_check(&kind).unwrap();
            assert!(r.pass, "{r}");
        }
        let aff = modular_class_check(&AlgebraKind::AffXR).unwrap();
        assert_eq!(aff.field, "-1*dy");
        assert!(!aff.unimodular);
        let book = modular_class_check(&AlgebraKind::book(rational(1, 2)).unwrap()).unwrap();
        assert_eq!(book.field, "-3/2*dz");
    }
}
