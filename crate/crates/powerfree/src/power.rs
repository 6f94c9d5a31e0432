//! Exact periodicity and fractional-power analysis.
//!
//! A word has period `p` when `w[i] = w[i+p]` wherever both sides exist; its
//! exponent is `|w| / p` for the least such `p`. Freeness checks come in two
//! interchangeable engines: a definitional oracle that enumerates factors and
//! measures each least period by direct scanning, and an optimized engine
//! that runs one border-array (failure function) pass per start position,
//! O(n^2) overall. Verdicts and witnesses of the two must agree; the test
//! suite holds them to that.

use std::fmt;

use crate::rational::Rational;
use crate::word::{Symbol, TernaryWord};
use crate::{Error, Result};

/// Avoidance flavor for a threshold `a`: `Strict` rejects factors with
/// exponent `>= a` (the word avoids `a`-powers), `Plus` rejects exponents
/// `> a` (the word avoids `a+`-powers).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FreenessMode {
    Strict,
    Plus,
}

impl FreenessMode {
    pub fn name(self) -> &'static str {
        match self {
            FreenessMode::Strict => "strict",
            FreenessMode::Plus => "plus",
        }
    }
}

impl fmt::Display for FreenessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which freeness engine to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Engine {
    /// Enumerate every factor; measure its least period by definition.
    Oracle,
    /// One failure-function pass per start position.
    Optimized,
}

/// A located fractional power: the factor at `[start, start + total_length)`
/// repeats with the stated period, and `exponent = total_length / period`.
///
/// Witnesses produced by the freeness engines always carry the least period
/// of the factor. Occurrences built by the alignment checks may carry a
/// non-minimal period; those are marked `aligned`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepetitionOccurrence {
    pub start: usize,
    pub period: usize,
    pub total_length: usize,
    pub exponent: Rational,
    pub aligned: bool,
}

impl RepetitionOccurrence {
    pub fn new(start: usize, period: usize, total_length: usize) -> RepetitionOccurrence {
        assert!(period >= 1 && total_length >= period);
        RepetitionOccurrence {
            start,
            period,
            total_length,
            exponent: Rational::new(total_length as i64, period as i64),
            aligned: false,
        }
    }

    /// An occurrence whose period is stated by construction rather than
    /// measured as the least period.
    pub fn aligned(start: usize, period: usize, total_length: usize) -> RepetitionOccurrence {
        RepetitionOccurrence {
            aligned: true,
            ..RepetitionOccurrence::new(start, period, total_length)
        }
    }

    /// Exclusive end position.
    pub fn end(&self) -> usize {
        self.start + self.total_length
    }

    /// The matched overhang `r = total_length - period` (the length of `x`
    /// when the occurrence is written as `xyx` with `|xy| = period`).
    pub fn matched_length(&self) -> usize {
        self.total_length - self.period
    }

    /// Checks that the occurrence fits in `w` and that the stated period
    /// really holds over its whole range.
    pub fn validate_in(&self, w: &TernaryWord) -> Result<()> {
        if self.end() > w.len() {
            return Err(Error::OccurrenceOutOfBounds {
                end: self.end(),
                len: w.len(),
            });
        }
        let u = w.symbols();
        for i in self.start..self.end() - self.period {
            if u[i] != u[i + self.period] {
                return Err(Error::PeriodViolated {
                    position: i,
                    period: self.period,
                });
            }
        }
        Ok(())
    }

    /// Compact one-line form: start, period, length, exponent as `p/q`.
    pub fn to_line(&self) -> String {
        format!(
            "{} {} {} {}/{}",
            self.start,
            self.period,
            self.total_length,
            self.exponent.numerator(),
            self.exponent.denominator()
        )
    }
}

impl fmt::Display for RepetitionOccurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "start {} period {} length {} exponent {}",
            self.start, self.period, self.total_length, self.exponent
        )
    }
}

/// Outcome of a freeness query. A witness is present exactly when the word is
/// not free; it is the violating factor with the leftmost start and, at that
/// start, the smallest period.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreenessVerdict {
    pub free: bool,
    pub witness: Option<RepetitionOccurrence>,
}

impl FreenessVerdict {
    fn free() -> FreenessVerdict {
        FreenessVerdict { free: true, witness: None }
    }

    fn violated(witness: RepetitionOccurrence) -> FreenessVerdict {
        FreenessVerdict { free: false, witness: Some(witness) }
    }
}

/// Least period of a word, by the definition: the smallest `p >= 1` with
/// `w[i] = w[i+p]` for all valid `i`. Every nonempty word has period `|w|`.
pub fn least_period(w: &TernaryWord) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(least_period_slice(w.symbols()))
}

pub(crate) fn least_period_slice(u: &[Symbol]) -> usize {
    let n = u.len();
    'candidate: for p in 1..n {
        for i in 0..n - p {
            if u[i] != u[i + p] {
                continue 'candidate;
            }
        }
        return p;
    }
    n
}

/// Exponent `|w| / p` of a nonempty word, in lowest terms; always `>= 1`.
pub fn exponent(w: &TernaryWord) -> Result<Rational> {
    let p = least_period(w)?;
    Ok(Rational::new(w.len() as i64, p as i64))
}

fn violates(exp: Rational, threshold: Rational, mode: FreenessMode) -> bool {
    match mode {
        FreenessMode::Strict => exp >= threshold,
        FreenessMode::Plus => exp > threshold,
    }
}

fn require_threshold(threshold: Rational) -> Result<()> {
    if threshold < Rational::from_integer(1) {
        return Err(Error::ThresholdBelowOne(threshold));
    }
    Ok(())
}

/// Failure function of `u`: `fail[l]` is the length of the longest proper
/// border of the prefix of length `l`, so that prefix has least period
/// `l - fail[l]`.
pub(crate) fn failure_function(u: &[Symbol]) -> Vec<usize> {
    let m = u.len();
    let mut fail = vec![0usize; m + 1];
    for l in 2..=m {
        let mut k = fail[l - 1];
        while k > 0 && u[k] != u[l - 1] {
            k = fail[k];
        }
        if u[k] == u[l - 1] {
            k += 1;
        }
        fail[l] = k;
    }
    fail
}

/// Freeness check with the optimized engine.
pub fn check_freeness(
    w: &TernaryWord,
    threshold: Rational,
    mode: FreenessMode,
) -> Result<FreenessVerdict> {
    check_freeness_with(Engine::Optimized, w, threshold, mode)
}

/// Freeness check with an explicit engine choice.
///
/// Both engines visit factors in (start ascending, length ascending) order
/// and stop at the first violation, which realizes the witness tie-break:
/// leftmost start first, and at that start the smallest period, because the
/// least period of a growing factor never decreases.
pub fn check_freeness_with(
    engine: Engine,
    w: &TernaryWord,
    threshold: Rational,
    mode: FreenessMode,
) -> Result<FreenessVerdict> {
    require_threshold(threshold)?;
    match engine {
        Engine::Oracle => Ok(freeness_oracle(w, threshold, mode)),
        Engine::Optimized => Ok(freeness_optimized(w, threshold, mode)),
    }
}

fn freeness_oracle(w: &TernaryWord, threshold: Rational, mode: FreenessMode) -> FreenessVerdict {
    let u = w.symbols();
    let n = u.len();
    for start in 0..n {
        for len in 1..=n - start {
            let p = least_period_slice(&u[start..start + len]);
            let exp = Rational::new(len as i64, p as i64);
            if violates(exp, threshold, mode) {
                return FreenessVerdict::violated(RepetitionOccurrence::new(start, p, len));
            }
        }
    }
    FreenessVerdict::free()
}

fn freeness_optimized(w: &TernaryWord, threshold: Rational, mode: FreenessMode) -> FreenessVerdict {
    let u = w.symbols();
    let n = u.len();
    let mut fail = vec![0usize; n + 1];
    for start in 0..n {
        let suffix = &u[start..];
        let m = suffix.len();
        fail[1] = 0;
        for l in 1..=m {
            if l >= 2 {
                let mut k = fail[l - 1];
                while k > 0 && suffix[k] != suffix[l - 1] {
                    k = fail[k];
                }
                if suffix[k] == suffix[l - 1] {
                    k += 1;
                }
                fail[l] = k;
            }
            let p = l - fail[l];
            let exp = Rational::new(l as i64, p as i64);
            if violates(exp, threshold, mode) {
                return FreenessVerdict::violated(RepetitionOccurrence::new(start, p, l));
            }
        }
    }
    FreenessVerdict::free()
}

/// Maximum exponent over all factors of length >= 2, with a witness
/// occurrence; ties go to the leftmost start, then the smallest period.
pub fn max_exponent(w: &TernaryWord) -> Result<(Rational, RepetitionOccurrence)> {
    if w.len() < 2 {
        return Err(Error::WordTooShort { len: w.len(), min: 2 });
    }
    let u = w.symbols();
    let n = u.len();
    let mut best: Option<(Rational, RepetitionOccurrence)> = None;
    let mut fail = vec![0usize; n + 1];
    for start in 0..n.saturating_sub(1) {
        let suffix = &u[start..];
        let m = suffix.len();
        fail[1] = 0;
        for l in 2..=m {
            let mut k = fail[l - 1];
            while k > 0 && suffix[k] != suffix[l - 1] {
                k = fail[k];
            }
            if suffix[k] == suffix[l - 1] {
                k += 1;
            }
            fail[l] = k;
            let p = l - k;
            let exp = Rational::new(l as i64, p as i64);
            if best.as_ref().map_or(true, |(b, _)| exp > *b) {
                best = Some((exp, RepetitionOccurrence::new(start, p, l)));
            }
        }
    }
    Ok(best.expect("word of length >= 2 has a factor of length 2"))
}

/// All maximal violating occurrences: each carries the least period of its
/// factor and cannot be extended left or right with that period. Sorted by
/// start, then period. The list is empty exactly when [`check_freeness`]
/// reports the word free.
pub fn find_violations(
    w: &TernaryWord,
    threshold: Rational,
    mode: FreenessMode,
) -> Result<Vec<RepetitionOccurrence>> {
    require_threshold(threshold)?;
    let u = w.symbols();
    let n = u.len();
    let mut out = Vec::new();
    // Exponent-1 factors can only violate in strict mode at threshold 1.
    let unit_exponent_violates = violates(Rational::from_integer(1), threshold, mode);
    for p in 1..=n {
        let limit = n - p;
        // Runs of agreement u[i] = u[i+p] give the periodic intervals with at
        // least one full period plus overhang.
        let mut i = 0;
        while i < limit {
            if u[i] == u[i + p] {
                let a = i;
                while i < limit && u[i] == u[i + p] {
                    i += 1;
                }
                let len = (i - a) + p;
                if least_period_slice(&u[a..a + len]) == p {
                    let exp = Rational::new(len as i64, p as i64);
                    if violates(exp, threshold, mode) {
                        out.push(RepetitionOccurrence::new(a, p, len));
                    }
                }
            } else {
                i += 1;
            }
        }
        if unit_exponent_violates {
            // Bare single-period windows, maximal when neither neighbor
            // agrees across the period.
            for j in 0..=limit {
                let extendable_left = j > 0 && u[j - 1] == u[j - 1 + p];
                let extendable_right = j < limit && u[j] == u[j + p];
                if !extendable_left && !extendable_right && least_period_slice(&u[j..j + p]) == p {
                    out.push(RepetitionOccurrence::new(j, p, p));
                }
            }
        }
    }
    out.sort_by_key(|o| (o.start, o.period));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::generate;

    fn w(s: &str) -> TernaryWord {
        s.parse().unwrap()
    }

    fn r(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn least_period_examples() {
        assert_eq!(least_period(&w("123123")).unwrap(), 3);
        assert_eq!(least_period(&w("1213121")).unwrap(), 4);
        assert_eq!(least_period(&w("1")).unwrap(), 1);
        assert!(matches!(least_period(&TernaryWord::empty()), Err(Error::EmptyWord)));
    }

    #[test]
    fn least_period_agrees_with_failure_function() {
        // Same quantity along an independent route: the failure function of
        // every suffix gives the least period of each of its prefixes.
        for word in ["1213121", "123123", "11", "123213231213123132312132123"] {
            let u = w(word);
            let s = u.symbols();
            for start in 0..s.len() {
                let fail = failure_function(&s[start..]);
                for l in 1..=s.len() - start {
                    assert_eq!(
                        least_period_slice(&s[start..start + l]),
                        l - fail[l],
                        "word {word} factor at {start} len {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponent(&w("123123")).unwrap(), r(2, 1));
        assert_eq!(exponent(&w("1213121")).unwrap(), r(7, 4));
        assert_eq!(exponent(&w("123")).unwrap(), r(1, 1));
    }

    #[test]
    fn square_of_a_letter_is_caught() {
        let v = check_freeness(&w("11"), r(7, 4), FreenessMode::Plus).unwrap();
        assert!(!v.free);
        let occ = v.witness.unwrap();
        assert_eq!((occ.start, occ.period, occ.total_length), (0, 1, 2));
        assert_eq!(occ.exponent, r(2, 1));
    }

    #[test]
    fn level_three_word_is_plus_free() {
        let word = generate(3).unwrap();
        let v = check_freeness(&word, r(7, 4), FreenessMode::Plus).unwrap();
        assert!(v.free && v.witness.is_none());
    }

    #[test]
    fn strict_and_plus_differ_exactly_at_the_threshold() {
        let word = w("1213121");
        let plus = check_freeness(&word, r(7, 4), FreenessMode::Plus).unwrap();
        assert!(plus.free);
        let strict = check_freeness(&word, r(7, 4), FreenessMode::Strict).unwrap();
        assert!(!strict.free);
        let occ = strict.witness.unwrap();
        assert_eq!(occ.exponent, r(7, 4));
        assert_eq!((occ.start, occ.period, occ.total_length), (0, 4, 7));
    }

    #[test]
    fn threshold_below_one_is_rejected() {
        assert!(check_freeness(&w("1"), r(3, 4), FreenessMode::Plus).is_err());
        assert!(find_violations(&w("1"), r(1, 2), FreenessMode::Strict).is_err());
    }

    #[test]
    fn strict_threshold_one_rejects_everything() {
        let v = check_freeness(&w("123"), r(1, 1), FreenessMode::Strict).unwrap();
        assert!(!v.free);
        let occ = v.witness.unwrap();
        assert_eq!((occ.start, occ.period, occ.total_length), (0, 1, 1));
    }

    #[test]
    fn engines_agree_on_small_words() {
        for word in ["11", "1213121", "123123", "121312321", "1", "123213231"] {
            let word = w(word);
            for threshold in [r(3, 2), r(7, 4), r(2, 1)] {
                for mode in [FreenessMode::Strict, FreenessMode::Plus] {
                    let a = check_freeness_with(Engine::Oracle, &word, threshold, mode).unwrap();
                    let b = check_freeness_with(Engine::Optimized, &word, threshold, mode).unwrap();
                    assert_eq!(a, b, "word {word} threshold {threshold} mode {mode}");
                }
            }
        }
    }

    #[test]
    fn max_exponent_examples() {
        let (exp, occ) = max_exponent(&w("11")).unwrap();
        assert_eq!(exp, r(2, 1));
        assert_eq!((occ.start, occ.period), (0, 1));
        let (exp, occ) = max_exponent(&w("123")).unwrap();
        assert_eq!(exp, r(1, 1));
        assert_eq!((occ.start, occ.period, occ.total_length), (0, 2, 2));
        assert!(max_exponent(&w("1")).is_err());
    }

    #[test]
    fn max_exponent_of_level_four_word() {
        let word = generate(4).unwrap();
        let (exp, occ) = max_exponent(&word).unwrap();
        assert!(exp <= r(7, 4));
        occ.validate_in(&word).unwrap();
        assert_eq!(exp, Rational::new(occ.total_length as i64, occ.period as i64));
    }

    #[test]
    fn violation_lists() {
        let v = find_violations(&w("1212"), r(7, 4), FreenessMode::Plus).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].start, v[0].period, v[0].total_length), (0, 2, 4));
        assert_eq!(v[0].exponent, r(2, 1));

        let word = generate(2).unwrap();
        assert!(find_violations(&word, r(7, 4), FreenessMode::Plus).unwrap().is_empty());

        let v = find_violations(&w("111"), r(1, 1), FreenessMode::Plus).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].start, v[0].period, v[0].total_length), (0, 1, 3));
        assert_eq!(v[0].exponent, r(3, 1));
    }

    #[test]
    fn violations_empty_iff_free() {
        let words = ["123", "1212", "111", "1213121", "12131212", "321123"];
        for word in words {
            let word = w(word);
            for threshold in [r(1, 1), r(3, 2), r(7, 4), r(2, 1)] {
                for mode in [FreenessMode::Strict, FreenessMode::Plus] {
                    let verdict = check_freeness(&word, threshold, mode).unwrap();
                    let violations = find_violations(&word, threshold, mode).unwrap();
                    assert_eq!(verdict.free, violations.is_empty());
                    for occ in &violations {
                        occ.validate_in(&word).unwrap();
                        assert_eq!(
                            least_period_slice(&word.symbols()[occ.start..occ.end()]),
                            occ.period
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn occurrence_validation_and_line_format() {
        let word = w("123123");
        let occ = RepetitionOccurrence::new(0, 3, 6);
        occ.validate_in(&word).unwrap();
        assert_eq!(occ.to_line(), "0 3 6 2/1");
        assert_eq!(occ.matched_length(), 3);
        let bad = RepetitionOccurrence::new(0, 2, 4);
        assert!(bad.validate_in(&word).is_err());
        let oob = RepetitionOccurrence::new(4, 1, 5);
        assert!(matches!(oob.validate_in(&word), Err(Error::OccurrenceOutOfBounds { .. })));
    }
}
