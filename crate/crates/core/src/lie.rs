//! Degree formulas for groups of Lie type.
//!
//! Every degree handled here factors as `scalar · q^e · ∏ (q^m - s)^{±1}`
//! with `s = ±1`, so [`DegreeFormula`] stores exactly that product and never
//! a general polynomial. Evaluation is exact over big integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::OutOfRange(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `ε^k`.
    pub fn pow(self, k: u32) -> Sign {
        if self == Sign::Minus && k % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// `q^m - s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycloFactor {
    pub m: u32,
    pub s: Sign,
}

impl CycloFactor {
    pub fn new(m: u32, s: Sign) -> Self {
        assert!(m >= 1, "factor exponent must be positive");
        CycloFactor { m, s }
    }

    /// `q^m - 1`
    pub fn minus(m: u32) -> Self {
        Self::new(m, Sign::Plus)
    }

    /// `q^m + 1`
    pub fn plus(m: u32) -> Self {
        Self::new(m, Sign::Minus)
    }

    fn eval(&self, q: &BigUint) -> BigUint {
        let qm: BigUint = q.pow(self.m);
        match self.s {
            Sign::Plus => qm - 1u32,
            Sign::Minus => qm + 1u32,
        }
    }
}

impl fmt::Display for CycloFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.s == Sign::Plus { '-' } else { '+' };
        if self.m == 1 {
            write!(f, "(q{op}1)")
        } else {
            write!(f, "(q^{}{op}1)", self.m)
        }
    }
}

/// `scalar · q^qpower · ∏ numerator / ∏ denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFormula {
    pub scalar: Ratio<u64>,
    pub qpower: u32,
    pub numerator: Vec<CycloFactor>,
    pub denominator: Vec<CycloFactor>,
}

impl DegreeFormula {
    pub fn new(numerator: Vec<CycloFactor>, denominator: Vec<CycloFactor>) -> Self {
        DegreeFormula { scalar: Ratio::one(), qpower: 0, numerator, denominator }
    }

    pub fn q_power(e: u32) -> Self {
        DegreeFormula { scalar: Ratio::one(), qpower: e, numerator: vec![], denominator: vec![] }
    }

    pub fn with_scalar(mut self, numer: u64, denom: u64) -> Self {
        self.scalar = Ratio::new(numer, denom);
        self
    }

    pub fn with_qpower(mut self, e: u32) -> Self {
        self.qpower = e;
        self
    }

    fn parts(&self, q: u64) -> Result<(BigUint, BigUint)> {
        arith::check_prime_power(q)?;
        let qb = BigUint::from(q);
        let mut num = BigUint::from(*self.scalar.numer()) * Pow::pow(&qb, self.qpower);
        for f in &self.numerator {
            num *= f.eval(&qb);
        }
        let mut den = BigUint::from(*self.scalar.denom());
        for f in &self.denominator {
            den *= f.eval(&qb);
        }
        Ok((num, den))
    }

    /// Exact value at `q`; errors when the quotient is not an integer.
    pub fn eval(&self, q: u64) -> Result<BigUint> {
        let (num, den) = self.parts(q)?;
        let (quot, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::NonIntegral(format!("{self} at q={q} is {num}/{den}")));
        }
        Ok(quot)
    }

    /// The q'-part of the value at `q`.
    ///
    /// The value is reduced to lowest terms. Any factor of the defining
    /// prime left in the denominator is absorbed by the q-power of the full
    /// degree, so only the prime-to-`q` part of the numerator survives. A
    /// denominator with other primes is a genuine non-integrality.
    pub fn eval_qprime_part(&self, q: u64) -> Result<BigUint> {
        let (r, _) = arith::check_prime_power(q)?;
        let (num, den) = self.parts(q)?;
        let g = num.gcd(&den);
        let (num, den) = (num / &g, den / &g);
        if !arith::strip_prime(&den, r)?.is_one() {
            return Err(Error::NonIntegral(format!("{self} at q={q} is {num}/{den}")));
        }
        arith::strip_prime(&num, r)
    }
}

impl fmt::Display for DegreeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut top = String::new();
        if *self.scalar.numer() != 1 {
            top.push_str(&self.scalar.numer().to_string());
        }
        match self.qpower {
            0 => {}
            1 => top.push('q'),
            e => top.push_str(&format!("q^{e}")),
        }
        for factor in &self.numerator {
            top.push_str(&factor.to_string());
        }
        if top.is_empty() {
            top.push('1');
        }
        let mut bottom = String::new();
        if *self.scalar.denom() != 1 {
            bottom.push_str(&self.scalar.denom().to_string());
        }
        for factor in &self.denominator {
            bottom.push_str(&factor.to_string());
        }
        if bottom.is_empty() {
            write!(f, "{top}")
        } else {
            write!(f, "{top}/{bottom}")
        }
    }
}

impl Serialize for DegreeFormula {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `r`-free part of `n`; `n` must be nonzero.
pub fn qprime_part(n: &BigUint, r: u64) -> Result<BigUint> {
    arith::check_prime(r)?;
    arith::strip_prime(n, r)
}

/// Same operation under the name used for the p'-part.
pub fn pprime_part(n: &BigUint, p: u64) -> Result<BigUint> {
    qprime_part(n, p)
}

fn gl_order_big(n: u32, eps: Sign, q: &BigUint) -> BigUint {
    let mut order: BigUint = q.pow(n * (n.saturating_sub(1)) / 2);
    for i in 1..=n {
        order *= CycloFactor::new(i, eps.pow(i)).eval(q);
    }
    order
}

/// `|GL^ε_n(q)| = q^{n(n-1)/2} ∏_{i=1}^n (q^i - ε^i)`.
pub fn gl_order(n: u32, eps: Sign, q: u64) -> Result<BigUint> {
    arith::check_prime_power(q)?;
    if n == 0 {
        return Err(Error::OutOfRange("rank must be positive".into()));
    }
    Ok(gl_order_big(n, eps, &BigUint::from(q)))
}

/// One `GL^{sign}_{rank}(q^{twist})` factor of a centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerFactor {
    pub rank: u32,
    pub sign: Sign,
    pub twist: u32,
}

impl CentralizerFactor {
    pub fn gl(rank: u32, twist: u32) -> Self {
        CentralizerFactor { rank, sign: Sign::Plus, twist }
    }

    pub fn gu(rank: u32, twist: u32) -> Self {
        CentralizerFactor { rank, sign: Sign::Minus, twist }
    }
}

/// A semisimple centralizer inside `GL^ε_n(q)`, as a product of
/// general linear/unitary groups over extension fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerSpec {
    pub factors: Vec<CentralizerFactor>,
}

impl CentralizerSpec {
    pub fn new(factors: Vec<CentralizerFactor>) -> Self {
        CentralizerSpec { factors }
    }

    pub fn validate(&self, n: u32) -> Result<()> {
        if self.factors.iter().any(|f| f.rank == 0 || f.twist == 0) {
            return Err(Error::OutOfRange("centralizer ranks and twists must be positive".into()));
        }
        let total: u32 = self.factors.iter().map(|f| f.rank * f.twist).sum();
        if total != n {
            return Err(Error::OutOfRange(format!("centralizer has total rank {total}, ambient rank is {n}")));
        }
        Ok(())
    }
}

/// `[GL^ε_n(q) : C(s)]_{r'}`, the degree of the semisimple character
/// attached to a class with centralizer `c`.
pub fn semisimple_degree(n: u32, eps: Sign, q: u64, r: u64, c: &CentralizerSpec) -> Result<BigUint> {
    let (char_prime, _) = arith::check_prime_power(q)?;
    if char_prime != r {
        return Err(Error::OutOfRange(format!("{q} is not a power of {r}")));
    }
    c.validate(n)?;
    let qb = BigUint::from(q);
    let whole = gl_order_big(n, eps, &qb);
    let sub = c.factors.iter().fold(BigUint::one(), |acc, f| {
        acc * gl_order_big(f.rank, f.sign, &Pow::pow(&qb, f.twist))
    });
    let (index, rem) = whole.div_rem(&sub);
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!("centralizer order {sub} does not divide {whole}")));
    }
    arith::strip_prime(&index, r)
}

/// Classical families carrying a pair of unipotent characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassicalFamily {
    /// `A_{n-1}`, i.e. `PSL_n(q)`, `n >= 4`
    A,
    /// `²A_{n-1}`, i.e. `PSU_n(q)`, `n >= 4`
    TwistedA,
    /// `B_n`, `n >= 3`, or `n = 2` with `q` odd
    B,
    /// `C_n`, same range and degrees as `B_n`
    C,
    /// `D_n`, `n >= 5`
    D,
    /// `²D_n`, `n >= 4`
    TwistedD,
    /// `B_2` with `q` a power of 2
    B2Even,
    /// `D_4`
    D4,
}

impl ClassicalFamily {
    pub const ALL: [ClassicalFamily; 8] = [
        ClassicalFamily::A,
        ClassicalFamily::TwistedA,
        ClassicalFamily::B,
        ClassicalFamily::C,
        ClassicalFamily::D,
        ClassicalFamily::TwistedD,
        ClassicalFamily::B2Even,
        ClassicalFamily::D4,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClassicalFamily::A => "A",
            ClassicalFamily::TwistedA => "2A",
            ClassicalFamily::B => "B",
            ClassicalFamily::C => "C",
            ClassicalFamily::D => "D",
            ClassicalFamily::TwistedD => "2D",
            ClassicalFamily::B2Even => "B2even",
            ClassicalFamily::D4 => "D4",
        }
    }

    /// Inclusive rank range, capped at `max`.
    pub fn ranks(self, max: u32) -> std::ops::RangeInclusive<u32> {
        match self {
            ClassicalFamily::A | ClassicalFamily::TwistedA => 4..=max,
            ClassicalFamily::B | ClassicalFamily::C => 2..=max,
            ClassicalFamily::D => 5..=max,
            ClassicalFamily::TwistedD => 4..=max,
            ClassicalFamily::B2Even => 2..=2.min(max),
            ClassicalFamily::D4 => 4..=4.min(max),
        }
    }

    pub fn check_rank(self, n: u32) -> Result<()> {
        let ok = match self {
            ClassicalFamily::A | ClassicalFamily::TwistedA => n >= 4,
            ClassicalFamily::B | ClassicalFamily::C => n >= 2,
            ClassicalFamily::D => n >= 5,
            ClassicalFamily::TwistedD => n >= 4,
            ClassicalFamily::B2Even => n == 2,
            ClassicalFamily::D4 => n == 4,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("rank {n} outside the range for {}", self.label())))
        }
    }

    /// Parity constraints on `q` for rows that need them.
    pub fn allows_q(self, n: u32, q: u64) -> bool {
        match self {
            ClassicalFamily::B | ClassicalFamily::C if n == 2 => q % 2 == 1,
            ClassicalFamily::B2Even => q.is_multiple_of(2),
            _ => true,
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().replace(['-', '_'], "").as_str() {
            "A" => Ok(ClassicalFamily::A),
            "2A" => Ok(ClassicalFamily::TwistedA),
            "B" => Ok(ClassicalFamily::B),
            "C" => Ok(ClassicalFamily::C),
            "D" => Ok(ClassicalFamily::D),
            "2D" => Ok(ClassicalFamily::TwistedD),
            "B2EVEN" => Ok(ClassicalFamily::B2Even),
            "D4" => Ok(ClassicalFamily::D4),
            other => Err(Error::Unsupported(format!("unknown classical family {other:?}"))),
        }
    }
}

/// A unipotent character: its partition/symbol tag and `χ(1)_{q'}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnipotentDegree {
    pub label: String,
    pub formula: DegreeFormula,
}

fn unipotent(label: impl Into<String>, formula: DegreeFormula) -> UnipotentDegree {
    UnipotentDegree { label: label.into(), formula }
}

/// The two unipotent characters listed for each classical row, with their
/// `χ(1)_{q'}` formulas. Twisted rows have their `(-1)^k` signs resolved for
/// the given rank.
pub fn table1_pair(family: ClassicalFamily, n: u32) -> Result<(UnipotentDegree, UnipotentDegree)> {
    use CycloFactor as F;
    family.check_rank(n)?;
    let pair = match family {
        ClassicalFamily::A => (
            unipotent(format!("(1,{})", n - 1), DegreeFormula::new(vec![F::minus(n - 1)], vec![F::minus(1)])),
            unipotent(
                format!("(2,{})", n - 2),
                DegreeFormula::new(
                    vec![F::minus(n), F::minus(n - 3)],
                    vec![F::minus(1), F::minus(2)],
                ),
            ),
        ),
        ClassicalFamily::TwistedA => {
            let minus_one = Sign::Minus;
            (
                unipotent(
                    format!("(1,{})", n - 1),
                    DegreeFormula::new(vec![F::new(n - 1, minus_one.pow(n - 1))], vec![F::plus(1)]),
                ),
                unipotent(
                    format!("(2,{})", n - 2),
                    DegreeFormula::new(
                        vec![F::new(n, minus_one.pow(n)), F::new(n - 3, minus_one.pow(n - 3))],
                        vec![F::plus(1), F::minus(2)],
                    ),
                ),
            )
        }
        ClassicalFamily::B | ClassicalFamily::C => (
            unipotent(
                format!("(1 {n}; 0)"),
                DegreeFormula::new(vec![F::minus(n - 1), F::plus(n)], vec![F::minus(1)]).with_scalar(1, 2),
            ),
            unipotent(
                format!("(0 {n}; 1)"),
                DegreeFormula::new(vec![F::plus(n - 1), F::minus(n)], vec![F::minus(1)]).with_scalar(1, 2),
            ),
        ),
        ClassicalFamily::B2Even => (
            unipotent("(0 1 2; -)", DegreeFormula::new(vec![F::minus(1), F::minus(1)], vec![]).with_scalar(1, 2)),
            unipotent("(0 2; 1)", DegreeFormula::new(vec![F::plus(1), F::plus(1)], vec![]).with_scalar(1, 2)),
        ),
        ClassicalFamily::D => (
            unipotent(
                format!("({}; 1)", n - 1),
                DegreeFormula::new(vec![F::minus(n), F::plus(n - 2)], vec![F::minus(2)]),
            ),
            unipotent(
                format!("(1 {n}; 0 1)"),
                DegreeFormula::new(vec![F::plus(n - 1), F::minus(n - 1)], vec![F::minus(2)]),
            ),
        ),
        ClassicalFamily::D4 => (
            unipotent(
                "(1 3; 0 2)",
                DegreeFormula::new(vec![F::plus(1), F::plus(1), F::plus(1), F::plus(3)], vec![]).with_scalar(1, 2),
            ),
            // q^2 + q + 1 = (q^3 - 1)/(q - 1)
            unipotent(
                "(1 2; 0 3)",
                DegreeFormula::new(vec![F::plus(2), F::plus(2), F::minus(3)], vec![F::minus(1)]).with_scalar(1, 2),
            ),
        ),
        ClassicalFamily::TwistedD => (
            unipotent(
                format!("(1 {}; -)", n - 1),
                DegreeFormula::new(vec![F::plus(n), F::minus(n - 2)], vec![F::minus(2)]),
            ),
            unipotent(
                format!("(0 1 {n}; 1)"),
                DegreeFormula::new(vec![F::plus(n - 1), F::minus(n - 1)], vec![F::minus(2)]),
            ),
        ),
    };
    Ok(pair)
}

/// Number of positive roots `N`; the Steinberg character has degree `q^N`.
pub fn steinberg_qpower(family: ClassicalFamily, n: u32) -> Result<u32> {
    family.check_rank(n)?;
    Ok(match family {
        ClassicalFamily::A | ClassicalFamily::TwistedA => n * (n - 1) / 2,
        ClassicalFamily::B | ClassicalFamily::C | ClassicalFamily::B2Even => n * n,
        ClassicalFamily::D | ClassicalFamily::TwistedD | ClassicalFamily::D4 => n * (n - 1),
    })
}

fn check_p(p: u64) -> Result<u64> {
    arith::check_prime(p)?;
    if p <= 3 {
        return Err(Error::OutOfRange(format!("need a prime p > 3, got {p}")));
    }
    Ok(p)
}

/// Both `χ(1)_{q'}` values of a classical row at `q`.
pub fn table1_qprime_values(family: ClassicalFamily, n: u32, q: u64) -> Result<(BigUint, BigUint)> {
    arith::check_prime_power(q)?;
    if !family.allows_q(n, q) {
        return Err(Error::OutOfRange(format!("q = {q} not allowed for {family} with rank {n}")));
    }
    let (first, second) = table1_pair(family, n)?;
    Ok((first.formula.eval_qprime_part(q)?, second.formula.eval_qprime_part(q)?))
}

/// True iff `p` fails to divide at least one of the two unipotent degrees.
pub fn not_both_divisible(family: ClassicalFamily, n: u32, q: u64, p: u64) -> Result<bool> {
    check_p(p)?;
    if q.is_multiple_of(p) {
        return Err(Error::OutOfRange(format!("p = {p} divides q = {q}")));
    }
    let (d1, d2) = table1_qprime_values(family, n, q)?;
    Ok(!(arith::divides(p, &d1) && arith::divides(p, &d2)))
}

/// `p ∤ d1`, `p ∤ d2` and `d2 ∤ d1`.
pub fn nondivisibility_check(d1: &BigUint, d2: &BigUint, p: u64) -> bool {
    !d1.is_zero()
        && !d2.is_zero()
        && !arith::divides(p, d1)
        && !arith::divides(p, d2)
        && !(d1 % d2).is_zero()
}

/// Families handled outside the classical unipotent table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExceptionalFamily {
    Psl2,
    /// `PSL^ε_3(q)`; `Minus` is `PSU_3(q)`.
    Psl3(Sign),
    Psp4,
    /// `²B_2(q²)`, parametrised by the field size `q² = 2^{2n+1}`.
    Suzuki,
    /// `²G_2(q²)`, parametrised by the field size `q² = 3^{2n+1}`.
    Ree,
    /// Defining characteristic only.
    G2,
    /// Defining characteristic only.
    F4,
    /// `³D_4(q)`, defining characteristic only.
    TriD4,
}

impl ExceptionalFamily {
    pub const ALL: [ExceptionalFamily; 9] = [
        ExceptionalFamily::Psl2,
        ExceptionalFamily::Psl3(Sign::Plus),
        ExceptionalFamily::Psl3(Sign::Minus),
        ExceptionalFamily::Psp4,
        ExceptionalFamily::Suzuki,
        ExceptionalFamily::Ree,
        ExceptionalFamily::G2,
        ExceptionalFamily::F4,
        ExceptionalFamily::TriD4,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ExceptionalFamily::Psl2 => "PSL2",
            ExceptionalFamily::Psl3(Sign::Plus) => "PSL3",
            ExceptionalFamily::Psl3(Sign::Minus) => "PSU3",
            ExceptionalFamily::Psp4 => "PSp4",
            ExceptionalFamily::Suzuki => "Suzuki",
            ExceptionalFamily::Ree => "Ree2G2",
            ExceptionalFamily::G2 => "G2",
            ExceptionalFamily::F4 => "F4",
            ExceptionalFamily::TriD4 => "3D4",
        }
    }

    /// Parses a family name; `PSL3e` takes its sign from `eps`.
    pub fn parse(name: &str, eps: Option<Sign>) -> Result<Self> {
        let key = name.trim().to_ascii_uppercase().replace(['-', '_'], "");
        Ok(match key.as_str() {
            "PSL2" => ExceptionalFamily::Psl2,
            "PSL3" => ExceptionalFamily::Psl3(eps.unwrap_or(Sign::Plus)),
            "PSU3" => ExceptionalFamily::Psl3(Sign::Minus),
            "PSL3E" => ExceptionalFamily::Psl3(eps.ok_or_else(|| {
                Error::OutOfRange("PSL3e needs an explicit sign".into())
            })?),
            "PSP4" => ExceptionalFamily::Psp4,
            "SUZUKI" | "2B2" => ExceptionalFamily::Suzuki,
            "REE2G2" | "REE" | "2G2" => ExceptionalFamily::Ree,
            "G2" => ExceptionalFamily::G2,
            "F4" => ExceptionalFamily::F4,
            "3D4" => ExceptionalFamily::TriD4,
            _ => return Err(Error::Unsupported(format!("unknown family {name:?}"))),
        })
    }
}

impl fmt::Display for ExceptionalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A character picked for the pair, with the facts its construction
/// guarantees recorded as data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterRecord {
    pub kind: &'static str,
    pub formula: String,
    #[serde(serialize_with = "arith::decimal::serialize")]
    pub degree: BigUint,
    /// `degree` is only the q'-part of the character degree.
    pub qprime_only: bool,
    pub extends_to_aut: bool,
    pub p_group_invariant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalPair {
    pub family: String,
    pub q: u64,
    pub p: u64,
    pub regime: &'static str,
    pub chi1: CharacterRecord,
    pub chi2: CharacterRecord,
}

impl ExceptionalPair {
    pub fn satisfies_nondivisibility(&self) -> bool {
        nondivisibility_check(&self.chi1.degree, &self.chi2.degree, self.p)
    }
}

fn record(kind: &'static str, formula: DegreeFormula, q: u64, extends: bool) -> Result<CharacterRecord> {
    Ok(CharacterRecord {
        kind,
        degree: formula.eval(q)?,
        formula: formula.to_string(),
        qprime_only: false,
        extends_to_aut: extends,
        p_group_invariant: true,
    })
}

fn steinberg(e: u32, q: u64) -> Result<CharacterRecord> {
    record("steinberg", DegreeFormula::q_power(e), q, true)
}

/// The pair `(χ_1, χ_2)` of p'-degree characters used for the small-rank
/// and twisted families, following the case analysis on the characteristic,
/// on `p | q ± 1` and on the p-part of the field exponent.
///
/// `χ_1` always extends to the automorphism group; `χ_2` is invariant under
/// every p-subgroup of it. For [`ExceptionalFamily::Suzuki`] and
/// [`ExceptionalFamily::Ree`], `q` is the field size `q²`.
pub fn exceptional_pair(family: ExceptionalFamily, q: u64, p: u64) -> Result<ExceptionalPair> {
    use CycloFactor as F;
    let p = check_p(p)?;
    let (r, a) = arith::check_prime_power(q)?;
    let defining = r == p;
    let outside = |why: &str| Err(Error::OutOfRange(format!("{family}, q={q}, p={p}: {why}")));
    let divides = |n: u64| n.is_multiple_of(p);

    let (regime, chi1, chi2) = match family {
        ExceptionalFamily::Psl2 => {
            if q < 4 {
                return outside("PSL2(q) is not simple for q < 4");
            }
            let plus = DegreeFormula::new(vec![F::plus(1)], vec![]);
            let minus = DegreeFormula::new(vec![F::minus(1)], vec![]);
            if defining && p > 5 {
                ("defining characteristic, p > 5", record("semisimple", plus, q, true)?, record("semisimple", minus, q, false)?)
            } else if defining {
                // p = 5: split on the 5'-part m of the field exponent
                let m = a / 5u32.pow(arith::valuation(a as u64, 5));
                if m == 1 {
                    let half = DegreeFormula::new(vec![F::plus(1)], vec![]).with_scalar(1, 2);
                    ("defining characteristic 5, field exponent a power of 5", record("semisimple", minus, q, true)?, record("semisimple", half, q, false)?)
                } else if m % 2 == 1 {
                    ("defining characteristic 5, odd 5'-exponent", record("semisimple", minus, q, true)?, record("semisimple", plus, q, false)?)
                } else {
                    ("defining characteristic 5, even 5'-exponent", record("semisimple", plus, q, true)?, record("semisimple", minus, q, false)?)
                }
            } else if r <= 3 {
                let m = a / (p as u32).pow(arith::valuation(a as u64, p));
                let chi2 = if m == 1 && r == 3 {
                    record("semisimple", DegreeFormula::new(vec![F::minus(1)], vec![]).with_scalar(1, 2), q, false)?
                } else if m == 1 {
                    // eigenvalues of order 3 lie in F_q iff the exponent is even
                    let f = if a % 2 == 0 { plus } else { minus };
                    record("semisimple", f, q, false)?
                } else if !divides(q - 1) {
                    record("semisimple", minus, q, false)?
                } else {
                    record("semisimple", plus, q, false)?
                };
                ("characteristic 2 or 3", steinberg(1, q)?, chi2)
            } else if r > 5 && !divides(q - 1) && !divides(q + 1) {
                ("non-defining characteristic r > 5, p prime to q^2 - 1", record("semisimple", plus, q, true)?, record("semisimple", minus, q, false)?)
            } else {
                let f = if divides(q - 1) { plus } else { minus };
                ("non-defining characteristic r > 3", steinberg(1, q)?, record("semisimple", f, q, false)?)
            }
        }
        ExceptionalFamily::Psl3(eps) => {
            if eps == Sign::Minus && q == 2 {
                return outside("PSU3(2) is not simple");
            }
            // q^2 + εq + 1 = (q^3 - ε)/(q - ε)
            let middle_num = F::new(3, eps);
            let middle_den = F::new(1, eps);
            if defining {
                let chi1 = DegreeFormula::new(vec![F::plus(1), middle_num], vec![middle_den]);
                let chi2 = DegreeFormula::new(vec![F::minus(1), middle_num], vec![middle_den]);
                ("defining characteristic", record("semisimple", chi1, q, true)?, record("semisimple", chi2, q, false)?)
            } else {
                let q_plus_eps = if eps == Sign::Plus { q + 1 } else { q - 1 };
                let chi2 = if !divides(q_plus_eps) {
                    // q(q + ε)
                    record("unipotent", DegreeFormula::new(vec![F::new(1, eps.flip())], vec![]).with_qpower(1), q, true)?
                } else {
                    // (q - ε)(q^2 + εq + 1)
                    record("semisimple", DegreeFormula::new(vec![F::new(1, eps), middle_num], vec![middle_den]), q, false)?
                };
                ("non-defining characteristic", steinberg(3, q)?, chi2)
            }
        }
        ExceptionalFamily::Psp4 => {
            if q < 3 {
                return outside("PSp4(2) is not simple");
            }
            if defining {
                let chi1 = DegreeFormula::new(vec![F::plus(1), F::plus(2)], vec![]);
                let chi2 = DegreeFormula::new(vec![F::minus(1), F::plus(2)], vec![]);
                ("defining characteristic", record("semisimple", chi1, q, true)?, record("semisimple", chi2, q, false)?)
            } else {
                let row = if q.is_multiple_of(2) { ClassicalFamily::B2Even } else { ClassicalFamily::B };
                let (u1, u2) = table1_pair(row, 2)?;
                let mut chosen = None;
                for u in [u1, u2] {
                    let value = u.formula.eval_qprime_part(q)?;
                    if !arith::divides(p, &value) {
                        chosen = Some(CharacterRecord {
                            kind: "unipotent",
                            formula: format!("{} {}", u.label, u.formula),
                            degree: value,
                            qprime_only: true,
                            extends_to_aut: true,
                            p_group_invariant: true,
                        });
                        break;
                    }
                }
                let Some(chi2) = chosen else {
                    return Err(Error::Internal(format!("p = {p} divides both B2 unipotent degrees at q = {q}")));
                };
                ("non-defining characteristic", steinberg(4, q)?, chi2)
            }
        }
        ExceptionalFamily::Suzuki => {
            if r != 2 || a < 3 || a % 2 == 0 {
                return outside("Suzuki field size must be 2^(2n+1) with n >= 1");
            }
            if !divides(q - 1) {
                return outside("needs p | q^2 - 1");
            }
            let chi2 = DegreeFormula::new(vec![F::plus(2)], vec![]);
            ("p divides q^2 - 1", steinberg(2, q)?, record("semisimple", chi2, q, false)?)
        }
        ExceptionalFamily::Ree => {
            if r != 3 || a < 3 || a % 2 == 0 {
                return outside("Ree field size must be 3^(2n+1) with n >= 1");
            }
            if !divides(q - 1) {
                return outside("needs p | q^2 - 1");
            }
            // q^4 - q^2 + 1 in the field size Q = q^2 is Q^2 - Q + 1 = (Q^3 + 1)/(Q + 1)
            let chi2 = DegreeFormula::new(vec![F::plus(3)], vec![F::plus(1)]);
            ("p divides q^2 - 1", steinberg(3, q)?, record("unique", chi2, q, true)?)
        }
        ExceptionalFamily::G2 | ExceptionalFamily::F4 | ExceptionalFamily::TriD4 => {
            if !defining {
                return outside("only the defining characteristic is covered");
            }
            // q^4 + q^2 + 1 = (q^6 - 1)/(q^2 - 1); q^8 + q^4 + 1 = (q^12 - 1)/(q^4 - 1)
            let (chi1, chi2) = match family {
                ExceptionalFamily::G2 => {
                    let eps = if q % 6 == 1 { Sign::Plus } else { Sign::Minus };
                    (
                        DegreeFormula::new(vec![F::minus(6)], vec![F::minus(2)]),
                        DegreeFormula::new(vec![F::new(3, eps.flip())], vec![]),
                    )
                }
                ExceptionalFamily::F4 => (
                    DegreeFormula::new(vec![F::minus(12)], vec![F::minus(4)]),
                    DegreeFormula::new(vec![F::plus(2), F::plus(4), F::minus(12)], vec![F::minus(4)]),
                ),
                _ => (
                    DegreeFormula::new(vec![F::minus(12)], vec![F::minus(4)]),
                    DegreeFormula::new(vec![F::plus(1), F::minus(12)], vec![F::minus(4)]),
                ),
            };
            ("defining characteristic, quoted degrees", record("unique", chi1, q, true)?, record("unique", chi2, q, true)?)
        }
    };
    Ok(ExceptionalPair { family: family.label().to_string(), q, p, regime, chi1, chi2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn prime_parts() {
        assert_eq!(qprime_part(&big(48), 2).unwrap(), big(3));
        assert_eq!(pprime_part(&big(60), 5).unwrap(), big(12));
        assert_eq!(qprime_part(&big(7u64.pow(5)), 7).unwrap(), big(1));
        assert!(qprime_part(&big(0), 7).is_err());
        assert!(qprime_part(&big(12), 4).is_err());
    }

    #[test]
    fn general_linear_orders() {
        assert_eq!(gl_order(1, Sign::Plus, 9).unwrap(), big(8));
        assert_eq!(gl_order(2, Sign::Plus, 3).unwrap(), big(48));
        assert_eq!(gl_order(1, Sign::Minus, 9).unwrap(), big(10));
        assert_eq!(gl_order(2, Sign::Minus, 2).unwrap(), big(18));
        assert!(gl_order(2, Sign::Plus, 6).is_err());
    }

    #[test]
    fn semisimple_examples() {
        let split = CentralizerSpec::new(vec![CentralizerFactor::gl(1, 1), CentralizerFactor::gl(1, 1)]);
        let torus = CentralizerSpec::new(vec![CentralizerFactor::gl(1, 2)]);
        assert_eq!(semisimple_degree(2, Sign::Plus, 7, 7, &split).unwrap(), big(8));
        assert_eq!(semisimple_degree(2, Sign::Plus, 7, 7, &torus).unwrap(), big(6));
        let three = CentralizerSpec::new(vec![CentralizerFactor::gl(1, 1); 3]);
        assert_eq!(semisimple_degree(3, Sign::Plus, 5, 5, &three).unwrap(), big(6 * 31));
        assert!(semisimple_degree(3, Sign::Plus, 5, 5, &split).is_err());
        assert!(semisimple_degree(2, Sign::Plus, 9, 2, &split).is_err());
        // GL_2(q) inside GL_3(q) misses the GL_1 block: total rank 2 != 3
        let bad = CentralizerSpec::new(vec![CentralizerFactor::gl(2, 1)]);
        assert!(semisimple_degree(3, Sign::Plus, 5, 5, &bad).is_err());
    }

    #[test]
    fn formula_display() {
        let (a1, a2) = table1_pair(ClassicalFamily::A, 4).unwrap();
        assert_eq!(a1.formula.to_string(), "(q^3-1)/(q-1)");
        assert_eq!(a2.formula.to_string(), "(q^4-1)(q-1)/(q-1)(q^2-1)");
        let (b1, _) = table1_pair(ClassicalFamily::B, 3).unwrap();
        assert_eq!(b1.formula.to_string(), "(q^2-1)(q^3+1)/2(q-1)");
    }

    #[test]
    fn table_rows_evaluate() {
        let (a1, a2) = table1_pair(ClassicalFamily::A, 4).unwrap();
        assert_eq!(a1.formula.eval(2).unwrap(), big(7));
        assert_eq!(a2.formula.eval(2).unwrap(), big(5));
        let (b1, b2) = table1_pair(ClassicalFamily::B, 3).unwrap();
        assert_eq!(b1.formula.eval(3).unwrap(), big(56));
        assert_eq!(b2.formula.eval(3).unwrap(), big(65));
        let (e1, e2) = table1_pair(ClassicalFamily::B2Even, 2).unwrap();
        assert!(matches!(e1.formula.eval(4), Err(Error::NonIntegral(_))));
        assert_eq!(e1.formula.eval_qprime_part(4).unwrap(), big(9));
        assert_eq!(e2.formula.eval_qprime_part(4).unwrap(), big(25));
        assert!(table1_pair(ClassicalFamily::D, 4).is_err());
        assert!(table1_pair(ClassicalFamily::A, 3).is_err());
    }

    #[test]
    fn twisted_a_signs_follow_parity() {
        // n = 4: (q^3 + 1)/(q + 1) and (q^4 - 1)(q + 1)/((q + 1)(q^2 - 1))
        let (f1, f2) = table1_pair(ClassicalFamily::TwistedA, 4).unwrap();
        assert_eq!(f1.formula.eval(2).unwrap(), big(3));
        assert_eq!(f2.formula.eval(2).unwrap(), big(5));
        // n = 5: (q^4 - 1)/(q + 1) and (q^5 + 1)(q^2 - 1)/((q + 1)(q^2 - 1))
        let (f1, f2) = table1_pair(ClassicalFamily::TwistedA, 5).unwrap();
        assert_eq!(f1.formula.eval(2).unwrap(), big(5));
        assert_eq!(f2.formula.eval(2).unwrap(), big(11));
    }

    #[test]
    fn steinberg_exponents() {
        assert_eq!(steinberg_qpower(ClassicalFamily::A, 4).unwrap(), 6);
        assert_eq!(steinberg_qpower(ClassicalFamily::B, 2).unwrap(), 4);
        assert_eq!(steinberg_qpower(ClassicalFamily::D, 5).unwrap(), 20);
        assert!(steinberg_qpower(ClassicalFamily::D, 3).is_err());
    }

    #[test]
    fn not_both_examples() {
        assert!(not_both_divisible(ClassicalFamily::A, 4, 2, 5).unwrap());
        assert!(not_both_divisible(ClassicalFamily::A, 4, 2, 7).unwrap());
        assert!(not_both_divisible(ClassicalFamily::B, 3, 3, 5).unwrap());
        assert!(not_both_divisible(ClassicalFamily::A, 4, 5, 5).is_err());
        assert!(not_both_divisible(ClassicalFamily::A, 4, 2, 3).is_err());
        assert!(not_both_divisible(ClassicalFamily::B, 2, 4, 5).is_err());
    }

    #[test]
    fn nondivisibility() {
        assert!(nondivisibility_check(&big(8), &big(6), 5));
        assert!(nondivisibility_check(&big(1024), &big(1025), 31));
        assert!(!nondivisibility_check(&big(12), &big(4), 5));
        assert!(!nondivisibility_check(&big(10), &big(3), 5));
    }

    #[test]
    fn exceptional_examples() {
        let psl2 = exceptional_pair(ExceptionalFamily::Psl2, 7, 5).unwrap();
        assert_eq!((psl2.chi1.degree.clone(), psl2.chi2.degree.clone()), (big(8), big(6)));
        let suz = exceptional_pair(ExceptionalFamily::Suzuki, 32, 31).unwrap();
        assert_eq!((suz.chi1.degree.clone(), suz.chi2.degree.clone()), (big(1024), big(1025)));
        let psp4 = exceptional_pair(ExceptionalFamily::Psp4, 5, 5).unwrap();
        assert_eq!((psp4.chi1.degree.clone(), psp4.chi2.degree.clone()), (big(156), big(104)));
        // 13 divides q^2 + 1 = 26 at q = 5, so the Steinberg route is taken
        let psp4 = exceptional_pair(ExceptionalFamily::Psp4, 5, 13).unwrap();
        assert_eq!((psp4.chi1.degree.clone(), psp4.chi2.degree.clone()), (big(625), big(18)));
        assert!(psp4.chi2.qprime_only);
        let a5 = exceptional_pair(ExceptionalFamily::Psl2, 5, 5).unwrap();
        assert_eq!((a5.chi1.degree.clone(), a5.chi2.degree.clone()), (big(4), big(3)));
        let ree = exceptional_pair(ExceptionalFamily::Ree, 27, 13).unwrap();
        assert_eq!(ree.chi2.degree, big(27 * 27 - 27 + 1));
        assert!(exceptional_pair(ExceptionalFamily::Suzuki, 32, 5).is_err());
        assert!(exceptional_pair(ExceptionalFamily::Psl2, 3, 5).is_err());
        assert!(exceptional_pair(ExceptionalFamily::G2, 8, 7).is_err());
    }
}
