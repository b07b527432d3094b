//! Generating sets for stabilizers of rational points.
//!
//! For `a = 10w^∞` with primitive `w` the stabilizer of `a` is generated by
//! `x2, x3, y1, y2` and `w(x1^-1, x1^-1 x0)`. Any other rational point `b`
//! other than `0^∞`, `1^∞` is first moved to such a point by a word `h` found
//! in the Schreier graph, and the five generators are conjugated by `h`.
//!
//! Whether the five words generate the *whole* stabilizer is not something a
//! finite computation can confirm. What is checked here is that every
//! generator and sampled product fixes the point (symbolically and on the
//! rational value), that the Reidemeister–Schreier generators `x_{W,n}`,
//! `y_{W,n}` collapse to `x_m`, `y_m`, and that `x_n`, `y_n` for larger `n`
//! are reached from the four generators by conjugation.

use std::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cantor::{BitString, RationalPoint};
use crate::error::{Error, Result};
use crate::plmap::PLMap;
use crate::relators::finite_presentation_relators;
use crate::report::Report;
use crate::schreier::{default_radius, find_path, loop_root, loop_word, GreyLabel};
use crate::word::{GenWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `x_{W,n} = W(x0^-1 x1, x1) · x0^n x1 x0^-n · W(..)^-1`
    X,
    /// `y_{W,n} = W(x0^-1 x1, x1) · x0^-(n+1) x1 x0^n · W(..)^-1`
    Y,
    /// `z_w = w^R(x1, x0^-1 x1)`
    Z,
}

/// Schreier generator of the stabilizer of `10w^∞`. `label` and `n` are used
/// by the `X` and `Y` families; `period` is required for `Z` and, when given
/// for `X`/`Y`, rejects labels that are not unique addresses.
pub fn schreier_generator(
    kind: GeneratorKind,
    label: &GreyLabel,
    n: u32,
    period: Option<&BitString>,
) -> Result<GenWord> {
    if let Some(w) = period {
        if !w.is_primitive() {
            return Err(Error::invalid(format!("period {w} is empty or a proper power")));
        }
    }
    let core = match kind {
        GeneratorKind::Z => {
            let w = period.ok_or_else(|| Error::invalid("z_w needs a period"))?;
            return Ok(loop_word(w));
        }
        _ if n < 1 => return Err(Error::invalid(format!("n must be at least 1, got {n}"))),
        GeneratorKind::X => GenWord::xn(n + 1),
        GeneratorKind::Y => GenWord::yn(n),
    };
    if let Some(w) = period {
        let forbidden = GreyLabel::loop_label(w);
        if label.starts_with(&forbidden) {
            return Err(Error::invalid(format!("label {label} has the loop label {forbidden} as a prefix")));
        }
    }
    Ok(core.conjugate(&label.to_word()))
}

/// Checks `x_{W,n} = x_{n+1+|W|_B}` and `y_{W,n} = y_{n+|W|_A}` for every label
/// `W` of length at most `max_label_len` and `1 <= n <= max_n`.
pub fn check_reduction(max_label_len: usize, max_n: u32) -> Report {
    let mut report = Report::new(format!("Schreier generator reduction (|W|<={max_label_len}, n<={max_n})"));
    for label in GreyLabel::all_up_to(max_label_len) {
        for n in 1..=max_n {
            let x = schreier_generator(GeneratorKind::X, &label, n, None).expect("n >= 1");
            let xi = n as usize + 1 + label.count_b();
            report.record(format!("x_{{{label},{n}}} = x{xi}"), x.to_plmap() == PLMap::x(xi as u64));
            let y = schreier_generator(GeneratorKind::Y, &label, n, None).expect("n >= 1");
            let yi = n as usize + label.count_a();
            report.record(format!("y_{{{label},{n}}} = y{yi}"), y.to_plmap() == PLMap::y(yi as u64));
        }
    }
    report
}

/// `w(x1^-1, x1^-1 x0)`: `0 -> x1^-1`, `1 -> x1^-1 x0`.
pub fn period_generator(w: &BitString) -> GenWord {
    GenWord::substitute(w.bits().iter(), |b| {
        if *b == 0 {
            GenWord::letter(Letter::X1Inv)
        } else {
            GenWord::new(vec![Letter::X1Inv, Letter::X0])
        }
    })
}

/// `x2, x3, y1, y2, w(x1^-1, x1^-1 x0)`, generating the stabilizer of `10w^∞`.
pub fn base_generators(w: &BitString) -> Vec<GenWord> {
    vec![GenWord::xn(2), GenWord::xn(3), GenWord::yn(1), GenWord::yn(2), period_generator(w)]
}

/// If `p = 10u^∞` for a primitive `u`, returns `u`.
pub fn loop_period(p: &RationalPoint) -> Option<BitString> {
    if p.prefix(2) != [1, 0] {
        return None;
    }
    let tail = p.shift().shift();
    tail.preperiod().is_empty().then(|| tail.period().clone())
}

/// A generating set for the stabilizer of a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerGens {
    pub point: RationalPoint,
    /// Word moving `point` to `10w^∞`; empty when `point` already has that form.
    pub conjugator: GenWord,
    pub period: BitString,
    pub generators: Vec<GenWord>,
}

/// Generators of the stabilizer of `b`.
///
/// `0^∞` and `1^∞` are fixed by all of F, which gets `{x0, x1}`. If `b = 10u^∞`
/// the base generators for `u` are returned unchanged. Otherwise, with `w` the
/// canonical period of `b`, a shortest `h` moving `b` to `10w^∞` is found within
/// `max_radius` (default `|v| + 4|w| + 8`) and each base generator `s` becomes
/// `h s h^-1`.
pub fn theorem_generators(b: &RationalPoint, max_radius: Option<usize>) -> Result<StabilizerGens> {
    if b.is_global_fixed_point() {
        return Ok(StabilizerGens {
            point: b.clone(),
            conjugator: GenWord::empty(),
            period: b.period().clone(),
            generators: vec![GenWord::x0(), GenWord::x1()],
        });
    }
    if let Some(u) = loop_period(b) {
        return Ok(StabilizerGens {
            point: b.clone(),
            conjugator: GenWord::empty(),
            generators: base_generators(&u),
            period: u,
        });
    }
    let w = b.period().clone();
    let target = loop_root(&w)?;
    let h = find_path(b, &target, max_radius.unwrap_or_else(|| default_radius(b)))?;
    let generators = base_generators(&w).iter().map(|s| s.conjugate(&h)).collect();
    Ok(StabilizerGens { point: b.clone(), conjugator: h, period: w, generators })
}

/// Evaluates `word` at `t` letter by letter without forming the product map.
pub fn eval_word(word: &GenWord, t: &BigRational) -> Result<BigRational> {
    let maps: Vec<PLMap> = Letter::ALL.iter().map(|l| l.to_plmap()).collect();
    word.letters().iter().try_fold(t.clone(), |acc, l| maps[*l as usize].eval_rational(&acc))
}

/// `count` reproducible random products of `gens` and their inverses, each
/// with between 1 and `max_factors` factors.
pub fn sample_products(gens: &[GenWord], count: usize, max_factors: usize, seed: u64) -> Vec<GenWord> {
    if gens.is_empty() || max_factors == 0 {
        return vec![GenWord::empty(); count];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inverses: Vec<GenWord> = gens.iter().map(GenWord::inverse).collect();
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_factors);
            (0..len).fold(GenWord::empty(), |acc, _| {
                let k = rng.gen_range(0..2 * gens.len());
                let factor = if k < gens.len() { &gens[k] } else { &inverses[k - gens.len()] };
                acc.then(factor)
            })
        })
        .collect()
}

/// Checks a generating set against its point: each generator fixes the point
/// under the symbolic action and as a PL map at the point's value, `samples`
/// random products of up to `word_len` factors fix it too, and the
/// identities `x_n = x2^(n-3) x3 x2^-(n-3)` (`4 <= n <= 8`) and
/// `y_n = y1^(n-2) y2 y1^-(n-2)` (`3 <= n <= 8`) hold.
pub fn verify_stabilizer(g: &StabilizerGens, samples: usize, word_len: usize, seed: u64) -> Report {
    let mut report = Report::new(format!("stabilizer of {}", g.point));
    let value = g.point.value();
    for (i, s) in g.generators.iter().enumerate() {
        let image = g.point.act_word(s);
        let symbolic = image == g.point;
        let map_value = s.to_plmap().eval_rational(&value);
        let numeric = map_value.as_ref().map(|v| *v == value).unwrap_or(false);
        report.record_with(
            format!("generator {} ({s}) fixes the point", i + 1),
            symbolic,
            format!("maps it to {image}"),
        );
        report.record_with(
            format!("generator {} fixes value {value}", i + 1),
            numeric,
            format!("maps it to {}", map_value.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string())),
        );
    }

    let products = sample_products(&g.generators, samples, word_len, seed);
    let bad = products
        .iter()
        .find(|u| g.point.act_word(u) != g.point || eval_word(u, &value).map(|v| v != value).unwrap_or(true));
    report.record_with(
        format!("{samples} sampled products (<= {word_len} factors, seed {seed}) fix the point"),
        bad.is_none(),
        bad.map(|u| format!("{u} moves it")).unwrap_or_default(),
    );

    let x2 = PLMap::x(2);
    let x3 = PLMap::x(3);
    for n in 4..=8 {
        let k = n as i64 - 3;
        let rhs = x2.pow(k).then(&x3).then(&x2.pow(-k));
        report.record(format!("x{n} = x2^{k} x3 x2^-{k}"), rhs == PLMap::x(n));
    }
    let y1 = PLMap::y(1);
    let y2 = PLMap::y(2);
    for n in 3..=8 {
        let k = n as i64 - 2;
        let rhs = y1.pow(k).then(&y2).then(&y1.pow(-k));
        report.record(format!("y{n} = y1^{k} y2 y1^-{k}"), rhs == PLMap::y(n));
    }
    report
}

/// The eight relators that present the stabilizer beyond a finite region:
/// the two relators of F rewritten in `x2, x3` and in `y1, y2`, and
/// `[x_i, y_j]` for `i in {2, 3}`, `j in {1, 2}`.
pub fn check_fp_relators() -> Report {
    let mut report = Report::new("stabilizer relators");
    let (x2, x3, y1, y2) = (GenWord::xn(2), GenWord::xn(3), GenWord::yn(1), GenWord::yn(2));
    for (name, g0, g1) in [("x2, x3", &x2, &x3), ("y1, y2", &y1, &y2)] {
        for (i, r) in finite_presentation_relators(g0, g1).iter().enumerate() {
            report.record(format!("relator {} in {name}", i + 1), r.to_plmap().is_identity());
        }
    }
    for (xi, x) in [(2, &x2), (3, &x3)] {
        for (yj, y) in [(1, &y1), (2, &y2)] {
            report.record(format!("[x{xi}, y{yj}] = 1"), x.commutator(y).to_plmap().is_identity());
        }
    }
    report
}

/// For `p = v10^∞` and `q = v01^∞` (the same real number, different points of
/// the Cantor set), checks that each point's generators fix the other point.
pub fn twin_stabilizer_check(v: &BitString) -> Report {
    let mut report = Report::new(format!("twin stabilizers (v={v})"));
    let p = RationalPoint::canonicalize(v.concat(&"1".parse().expect("literal")), "0".parse().expect("literal"))
        .expect("nonempty period");
    let q = RationalPoint::canonicalize(v.concat(&"0".parse().expect("literal")), "1".parse().expect("literal"))
        .expect("nonempty period");
    for (own, other) in [(&p, &q), (&q, &p)] {
        match theorem_generators(own, None) {
            Ok(g) => {
                for (i, s) in g.generators.iter().enumerate() {
                    let image = other.act_word(s);
                    report.record_with(
                        format!("generator {} of {own} fixes {other}", i + 1),
                        image == *other,
                        format!("maps it to {image}"),
                    );
                }
            }
            Err(e) => report.record_with(format!("generators of {own}"), false, e.to_string()),
        }
    }
    report
}

impl StabilizerGens {
    /// Header line `# point=<p> h=<word> w=<period>` followed by one generator
    /// per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("# point={} h={} w={}\n", self.point, self.conjugator, self.period);
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`StabilizerGens::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::parse(0, "missing header line"))?;
        let rest = header.strip_prefix('#').ok_or_else(|| Error::parse(0, "header must start with '#'"))?;
        let (mut point, mut h, mut w) = (None, None, None);
        for field in rest.split_whitespace() {
            let (key, value) =
                field.split_once('=').ok_or_else(|| Error::parse(0, format!("malformed header field {field:?}")))?;
            match key {
                "point" => point = Some(value.parse::<RationalPoint>()?),
                "h" => h = Some(value.parse::<GenWord>()?),
                "w" => w = Some(value.parse::<BitString>()?),
                _ => return Err(Error::parse(0, format!("unknown header field {key:?}"))),
            }
        }
        let missing = |k: &str| Error::parse(0, format!("header lacks {k}="));
        Ok(StabilizerGens {
            point: point.ok_or_else(|| missing("point"))?,
            conjugator: h.ok_or_else(|| missing("h"))?,
            period: w.ok_or_else(|| missing("w"))?,
            generators: lines.map(str::parse).collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GensJson::from(self)).expect("plain data serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GensJson = serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        Ok(StabilizerGens {
            point: doc.point.parse()?,
            conjugator: doc.h.parse()?,
            period: doc.w.parse()?,
            generators: doc.generators,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct GensJson {
    point: String,
    h: String,
    w: String,
    generators: Vec<GenWord>,
}

impl From<&StabilizerGens> for GensJson {
    fn from(g: &StabilizerGens) -> Self {
        GensJson {
            point: g.point.to_string(),
            h: g.conjugator.to_string(),
            w: g.period.to_string(),
            generators: g.generators.clone(),
        }
    }
}

impl fmt::Display for StabilizerGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> RationalPoint {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn label(s: &str) -> GreyLabel {
        s.parse().unwrap()
    }

    #[test]
    fn schreier_generator_examples() {
        let x = schreier_generator(GeneratorKind::X, &GreyLabel::empty(), 1, None).unwrap();
        assert_eq!(x.to_string(), "abA");
        assert_eq!(x.to_plmap(), PLMap::x(2));
        let z = schreier_generator(GeneratorKind::Z, &GreyLabel::empty(), 0, Some(&bits("0"))).unwrap();
        assert_eq!(z, GenWord::x1());
        let y = schreier_generator(GeneratorKind::Y, &label("B"), 1, None).unwrap();
        assert_eq!(y.to_plmap(), PLMap::y(1));
    }

    #[test]
    fn schreier_generator_errors() {
        assert!(schreier_generator(GeneratorKind::X, &GreyLabel::empty(), 0, None).is_err());
        assert!(schreier_generator(GeneratorKind::Z, &GreyLabel::empty(), 1, None).is_err());
        assert!(schreier_generator(GeneratorKind::Z, &GreyLabel::empty(), 1, Some(&bits("0101"))).is_err());
        // w = 01 forbids labels starting with AB
        assert!(schreier_generator(GeneratorKind::X, &label("ABA"), 1, Some(&bits("01"))).is_err());
        assert!(schreier_generator(GeneratorKind::X, &label("BA"), 1, Some(&bits("01"))).is_ok());
    }

    #[test]
    fn reduction_examples() {
        let xb1 = schreier_generator(GeneratorKind::X, &label("B"), 1, None).unwrap();
        assert_eq!(xb1.to_plmap(), PLMap::x(3));
        let ya2 = schreier_generator(GeneratorKind::Y, &label("A"), 2, None).unwrap();
        assert_eq!(ya2.to_plmap(), PLMap::y(3));
        assert!(check_reduction(3, 2).all_passed());
    }

    #[test]
    fn generators_of_one_half() {
        let g = theorem_generators(&pt("1/2"), None).unwrap();
        assert!(g.conjugator.is_empty());
        assert_eq!(g.period, bits("0"));
        let shown: Vec<String> = g.generators.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["abA", "aabAA", "AAba", "AAAbaa", "B"]);
    }

    #[test]
    fn generators_of_loop_point() {
        let g = theorem_generators(&pt("10(0100)"), None).unwrap();
        assert!(g.conjugator.is_empty());
        assert_eq!(g.period, bits("0100"));
        assert_eq!(g.generators[4].to_string(), "BBaBB");
    }

    #[test]
    fn generators_of_four_fifteenths() {
        let b = pt("4/15");
        let g = theorem_generators(&b, None).unwrap();
        assert!(!g.conjugator.is_empty());
        assert_eq!(b.act_word(&g.conjugator), pt("10(0100)"));
        for s in &g.generators {
            assert_eq!(b.act_word(s), b);
        }
    }

    #[test]
    fn fixed_points_get_all_of_f() {
        for p in [RationalPoint::zero_tail(), RationalPoint::one_tail()] {
            let g = theorem_generators(&p, None).unwrap();
            assert_eq!(g.generators, vec![GenWord::x0(), GenWord::x1()]);
            assert!(verify_stabilizer(&g, 10, 5, 1).all_passed());
        }
    }

    #[test]
    fn loop_period_detection() {
        assert_eq!(loop_period(&pt("1(0)")), Some(bits("0")));
        assert_eq!(loop_period(&pt("10(1)")), Some(bits("1")));
        assert_eq!(loop_period(&pt("(0100)")), None);
        assert_eq!(loop_period(&pt("0(1)")), None);
        assert_eq!(loop_period(&pt("101(0)")), None);
    }

    #[test]
    fn verification_and_relators() {
        let g = theorem_generators(&pt("1/2"), None).unwrap();
        let r = verify_stabilizer(&g, 20, 6, 7);
        assert!(r.all_passed(), "{r}");
        assert!(check_fp_relators().all_passed());
        assert_eq!(check_fp_relators().len(), 8);
    }

    #[test]
    fn verification_catches_a_wrong_generator() {
        let mut g = theorem_generators(&pt("1/2"), None).unwrap();
        g.generators.push(GenWord::x0());
        assert!(!verify_stabilizer(&g, 5, 3, 0).all_passed());
    }

    #[test]
    fn twins() {
        for v in ["", "1", "01"] {
            let r = twin_stabilizer_check(&bits(v));
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let g = theorem_generators(&pt("4/15"), None).unwrap();
        assert_eq!(StabilizerGens::from_text(&g.to_text()).unwrap(), g);
        assert_eq!(StabilizerGens::from_json(&g.to_json()).unwrap(), g);
        let half = theorem_generators(&pt("1/2"), None).unwrap();
        assert!(half.to_text().starts_with("# point=1(0) h=e w=0\n"));
        assert!(StabilizerGens::from_text("abA\n").is_err());
    }

    #[test]
    fn sampling_is_reproducible() {
        let gens = base_generators(&bits("01"));
        assert_eq!(sample_products(&gens, 10, 8, 42), sample_products(&gens, 10, 8, 42));
        assert_ne!(sample_products(&gens, 10, 8, 42), sample_products(&gens, 10, 8, 43));
    }
}
