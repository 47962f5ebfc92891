use super::{LceIndex, Occurrence, RepetitionQuery};
use crate::error::Result;
use crate::word::Word;

/// Accelerated scanner with the same output as [`super::scan_naive`].
///
/// Builds `T = w $0 D_1 $1 ... D_{k-1} $_{k-1}` where `D_i` is `w` twisted
/// by `δⁱ` and each `$` is a distinct value outside the alphabet. Block `i`
/// of a candidate at `start` matches iff the suffix of `w` at
/// `start + i·m` and the suffix of `D_i` at `start` share at least `m`
/// symbols.
pub fn scan_fast(w: &Word, q: &RepetitionQuery) -> Result<Vec<Occurrence>> {
    w.alphabet().check_same(q.delta().alphabet())?;
    let n = w.len();
    let k = q.k();
    if q.m_limit(n) < q.m_min() {
        return Ok(Vec::new());
    }

    let sep_base = w.alphabet().size() as u32;
    let powers = q.delta_powers();
    let mut text = Vec::with_capacity(k * (n + 1));
    for (i, p) in powers.iter().enumerate() {
        text.extend(w.iter().map(|&s| p.apply(s).0));
        text.push(sep_base + i as u32);
    }
    let index = LceIndex::new(&text);
    let offset = |i: usize| i * (n + 1);

    let mut out = Vec::new();
    for start in 0..n {
        let room = (n - start) / k;
        for m in q.m_min()..=q.m_max().min(room) {
            let hit = (1..k).all(|i| index.lce(start + i * m, offset(i) + start) >= m);
            if hit {
                out.push(Occurrence { start, m, k });
            }
        }
    }
    Ok(out)
}
