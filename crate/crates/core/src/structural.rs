//! Polynomial-time classification from the shape of minimal critical words.
//!
//! At the index dimension, a critical pair differs in two or three bits and
//! the copies of `f` created by the flips sit at fixed offsets:
//!
//! * two flips: copies at offsets `1` and `r+1`, `1 <= r <= |f|-2`, both
//!   flips inside `[r+1, |f|]`, dimension `|f| + r`;
//! * three flips `i1 < i2 < i3` spaced `r'` apart: the copy for `i2` at offset
//!   `1`, for `i1` at `2r'+1`, for `i3` at `3r'+1`, dimension `|f| + 3r'`
//!   (or the mirror image of this layout).
//!
//! Each layout fixes every bit of `alpha`, so the constructors assemble
//! `alpha` from the windows, reject conflicting overlaps, and keep the
//! candidate only if `alpha` and `beta` both avoid `f`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::Goodness;
use crate::word::{Pattern, Word, MAX_LEN};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CriticalWitness {
    pub pattern: Pattern,
    pub dimension: usize,
    pub p: usize,
    /// Ascending flip positions in `1..=dimension`.
    pub flips: Vec<usize>,
    /// Flip position -> offset of the copy of `f` that flip creates.
    pub offsets: BTreeMap<usize, usize>,
    /// `r` for two flips, `r'` for three.
    pub shift: usize,
    pub alpha: Word,
    pub beta: Word,
}

impl CriticalWitness {
    fn unordered_key(&self) -> (Word, Word) {
        if self.alpha <= self.beta {
            (self.alpha, self.beta)
        } else {
            (self.beta, self.alpha)
        }
    }

    fn sort_key(&self) -> (usize, Word, Word) {
        (self.dimension, self.alpha, self.beta)
    }

    /// The same certificate read right to left.
    pub fn mirrored(&self) -> CriticalWitness {
        let (d, n) = (self.dimension, self.pattern.len());
        let offsets: BTreeMap<usize, usize> = self
            .offsets
            .iter()
            .map(|(&i, &u)| (d + 1 - i, d + 2 - u - n))
            .collect();
        CriticalWitness {
            pattern: self.pattern.reverse(),
            dimension: d,
            p: self.p,
            flips: offsets.keys().copied().collect(),
            offsets,
            shift: self.shift,
            alpha: self.alpha.reverse(),
            beta: self.beta.reverse(),
        }
    }
}

/// A window `alpha[offset .. offset+|f|-1] = f + e_(flip-offset+1)`.
struct Window {
    offset: usize,
    flip: usize,
}

/// Assembles `alpha` from windows; `None` if two windows disagree or a
/// position is left undetermined.
fn assemble(f: &Pattern, d: usize, windows: &[Window]) -> Option<Word> {
    let n = f.len();
    let mut bits: Vec<Option<bool>> = vec![None; d];
    for w in windows {
        for k in 1..=n {
            let pos = w.offset + k - 1;
            let mut b = f.word().bit_unchecked(k);
            if pos == w.flip {
                b = !b;
            }
            match bits[pos - 1] {
                Some(existing) if existing != b => return None,
                _ => bits[pos - 1] = Some(b),
            }
        }
    }
    let mut packed = 0u64;
    for b in bits {
        packed = (packed << 1) | u64::from(b?);
    }
    Some(Word::from_bits_unchecked(packed, d))
}

fn flip_all(alpha: &Word, flips: &[usize]) -> Word {
    flips.iter().fold(*alpha, |w, &i| w.flip_unchecked(i))
}

fn dedup_and_sort(candidates: Vec<CriticalWitness>) -> Vec<CriticalWitness> {
    let mut seen = HashSet::new();
    let mut out: Vec<CriticalWitness> = candidates
        .into_iter()
        .filter(|w| seen.insert(w.unordered_key()))
        .collect();
    out.sort_by_key(CriticalWitness::sort_key);
    out
}

/// Candidate 2-critical pairs with copies at offsets `1` and `r+1`.
///
/// Both assignments of the two flips to the two copies are tried;
/// candidates equal as unordered pairs are reported once (first found).
pub fn two_flip_candidates(f: &Pattern) -> Vec<CriticalWitness> {
    let n = f.len();
    let mut out = Vec::new();
    for r in 1..=n.saturating_sub(2) {
        let d = n + r;
        if d > MAX_LEN {
            break;
        }
        for pa in (r + 1)..=n {
            for pb in (r + 1)..=n {
                if pa == pb {
                    continue;
                }
                let windows = [
                    Window {
                        offset: 1,
                        flip: pa,
                    },
                    Window {
                        offset: r + 1,
                        flip: pb,
                    },
                ];
                let Some(alpha) = assemble(f, d, &windows) else {
                    continue;
                };
                if alpha.contains_factor(f.word()) {
                    continue;
                }
                let flips = if pa < pb { vec![pa, pb] } else { vec![pb, pa] };
                let beta = flip_all(&alpha, &flips);
                if beta.contains_factor(f.word()) {
                    continue;
                }
                out.push(CriticalWitness {
                    pattern: *f,
                    dimension: d,
                    p: 2,
                    flips,
                    offsets: BTreeMap::from([(pa, 1), (pb, r + 1)]),
                    shift: r,
                    alpha,
                    beta,
                });
            }
        }
    }
    dedup_and_sort(out)
}

/// Candidate 3-critical pairs: flips `i1, i1+r', i1+2r'` with copies at
/// `2r'+1`, `1`, `3r'+1` respectively, for `3r'+1 <= |f|` and
/// `2r'+1 <= i1 <= 3r'`.
pub fn three_flip_candidates(f: &Pattern) -> Vec<CriticalWitness> {
    let n = f.len();
    let mut out = Vec::new();
    let mut rp = 1;
    while 3 * rp < n {
        let d = n + 3 * rp;
        if d > MAX_LEN {
            break;
        }
        for i1 in (2 * rp + 1)..=(3 * rp) {
            let (i2, i3) = (i1 + rp, i1 + 2 * rp);
            if i2 > n {
                continue;
            }
            let windows = [
                Window {
                    offset: 1,
                    flip: i2,
                },
                Window {
                    offset: 2 * rp + 1,
                    flip: i1,
                },
                Window {
                    offset: 3 * rp + 1,
                    flip: i3,
                },
            ];
            let Some(alpha) = assemble(f, d, &windows) else {
                continue;
            };
            if alpha.contains_factor(f.word()) {
                continue;
            }
            let flips = vec![i1, i2, i3];
            let beta = flip_all(&alpha, &flips);
            if beta.contains_factor(f.word()) {
                continue;
            }
            out.push(CriticalWitness {
                pattern: *f,
                dimension: d,
                p: 3,
                flips,
                offsets: BTreeMap::from([(i1, 2 * rp + 1), (i2, 1), (i3, 3 * rp + 1)]),
                shift: rp,
                alpha,
                beta,
            });
        }
        rp += 1;
    }
    dedup_and_sort(out)
}

/// The three-flip layout read right to left: copies at offsets `1`, `r'+1`
/// and `3r'+1` for the first, last and middle flip.
pub fn mirrored_three_flip_candidates(f: &Pattern) -> Vec<CriticalWitness> {
    dedup_and_sort(
        three_flip_candidates(&f.reverse())
            .iter()
            .map(CriticalWitness::mirrored)
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub pattern: Pattern,
    #[serde(flatten)]
    pub goodness: Goodness,
    /// Every candidate at the minimal dimension, sorted by `(d, alpha, beta)`.
    pub witnesses: Vec<CriticalWitness>,
}

impl Classification {
    pub fn is_good(&self) -> bool {
        self.goodness.is_good()
    }

    pub fn index(&self) -> Option<usize> {
        self.goodness.index()
    }

    /// Smallest `p` among the minimal witnesses.
    pub fn minimal_p(&self) -> Option<usize> {
        self.witnesses.iter().map(|w| w.p).min()
    }
}

/// Every structural candidate for `f`, all dimensions, deduplicated.
pub fn all_candidates(f: &Pattern) -> Vec<CriticalWitness> {
    let mut all = two_flip_candidates(f);
    all.extend(three_flip_candidates(f));
    all.extend(mirrored_three_flip_candidates(f));
    dedup_and_sort(all)
}

pub fn classify(f: &Pattern) -> Classification {
    let all = all_candidates(f);
    let Some(index) = all.first().map(|w| w.dimension) else {
        return Classification {
            pattern: *f,
            goodness: Goodness::Good,
            witnesses: Vec::new(),
        };
    };
    Classification {
        pattern: *f,
        goodness: Goodness::Bad { index },
        witnesses: all
            .into_iter()
            .take_while(|w| w.dimension == index)
            .collect(),
    }
}

/// Why a well-formed witness is not a critical pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessDefect {
    WrongLength,
    AlphaContainsPattern,
    BetaContainsPattern,
    DistanceMismatch,
    FlipsMismatch,
    /// Flipping this position does not put `f` at the declared offset.
    CopyMissing {
        flip: usize,
        offset: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessCheck {
    Valid,
    Invalid(WitnessDefect),
}

impl WitnessCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, WitnessCheck::Valid)
    }
}

/// Re-checks a witness from the words alone.
pub fn verify_witness(w: &CriticalWitness) -> Result<WitnessCheck> {
    let d = w.dimension;
    if w.p < 2 {
        return Err(Error::MalformedWitness(format!("p = {} < 2", w.p)));
    }
    if w.flips.len() != w.p {
        return Err(Error::MalformedWitness(format!(
            "p = {} but {} flips listed",
            w.p,
            w.flips.len()
        )));
    }
    if !w.flips.windows(2).all(|pair| pair[0] < pair[1]) {
        return Err(Error::MalformedWitness(
            "flips not strictly ascending".into(),
        ));
    }
    if let Some(&bad) = w.flips.iter().find(|&&i| i == 0 || i > d) {
        return Err(Error::MalformedWitness(format!(
            "flip {bad} outside 1..={d}"
        )));
    }
    if !w.offsets.keys().copied().eq(w.flips.iter().copied()) {
        return Err(Error::MalformedWitness(
            "offset keys differ from flips".into(),
        ));
    }
    let f = w.pattern.word();
    let invalid = |defect| Ok(WitnessCheck::Invalid(defect));
    if w.alpha.len() != d || w.beta.len() != d || f.len() > d {
        return invalid(WitnessDefect::WrongLength);
    }
    if w.alpha.contains_factor(f) {
        return invalid(WitnessDefect::AlphaContainsPattern);
    }
    if w.beta.contains_factor(f) {
        return invalid(WitnessDefect::BetaContainsPattern);
    }
    if w.alpha.hamming(&w.beta)? != w.p {
        return invalid(WitnessDefect::DistanceMismatch);
    }
    let differing = w.alpha.differing_positions(&w.beta)?;
    if differing != w.flips {
        return invalid(WitnessDefect::FlipsMismatch);
    }
    for (&flip, &offset) in &w.offsets {
        if !w.alpha.flip(flip)?.has_factor_at(f, offset) {
            return invalid(WitnessDefect::CopyMissing { flip, offset });
        }
    }
    // every neighbour of alpha towards beta leaves Q_d(f)
    debug_assert!(differing
        .iter()
        .all(|&i| w.alpha.flip_unchecked(i).contains_factor(f)));
    Ok(WitnessCheck::Valid)
}

/// Prepends `d - w.dimension` copies of the complement of `f_1` to both words.
///
/// A new occurrence of `f` would have to start inside the prefix, which is
/// impossible because the prefix never begins with `f_1`.
pub fn lift_witness(w: &CriticalWitness, d: usize) -> Result<CriticalWitness> {
    if d < w.dimension {
        return Err(Error::LiftBelowDimension {
            from: w.dimension,
            to: d,
        });
    }
    let k = d - w.dimension;
    if k == 0 {
        return Ok(w.clone());
    }
    let prefix = Word::constant(!w.pattern.first_bit(), k)?;
    Ok(CriticalWitness {
        pattern: w.pattern,
        dimension: d,
        p: w.p,
        flips: w.flips.iter().map(|i| i + k).collect(),
        offsets: w.offsets.iter().map(|(i, u)| (i + k, u + k)).collect(),
        shift: w.shift,
        alpha: prefix.concat(&w.alpha)?,
        beta: prefix.concat(&w.beta)?,
    })
}
