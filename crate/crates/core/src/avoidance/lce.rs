//! Longest-common-extension queries over an integer text.
//!
//! Suffix array by prefix doubling, LCP array by Kasai's algorithm, and a
//! sparse table for range minima over the LCP array. Queries are O(1).

/// Answers `lce(i, j)`: the length of the longest common prefix of the
/// suffixes starting at `i` and `j`.
#[derive(Debug, Clone)]
pub struct LceIndex {
    len: usize,
    rank: Vec<u32>,
    /// `sparse[level][r] = min(lcp[r .. r + 2^level])`, where `lcp[r]` is the
    /// common prefix of the suffixes ranked `r - 1` and `r`.
    sparse: Vec<Vec<u32>>,
}

impl LceIndex {
    pub fn new(text: &[u32]) -> Self {
        let sa = suffix_array(text);
        let mut rank = vec![0u32; text.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = kasai(text, &sa, &rank);
        LceIndex { len: text.len(), rank, sparse: sparse_table(lcp) }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn lce(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.len - i;
        }
        let (a, b) = {
            let (ri, rj) = (self.rank[i] as usize, self.rank[j] as usize);
            if ri < rj {
                (ri + 1, rj)
            } else {
                (rj + 1, ri)
            }
        };
        // min over lcp[a..=b]
        let level = (b - a + 1).ilog2() as usize;
        let row = &self.sparse[level];
        row[a].min(row[b + 1 - (1 << level)]) as usize
    }
}

/// Suffix array by prefix doubling; sorts `(rank[i], rank[i + h])` pairs.
pub(crate) fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    if n <= 1 {
        return sa;
    }
    let mut rank: Vec<u32> = text.to_vec();
    let mut next = vec![0u32; n];
    let mut h = 1;
    loop {
        // rank + 1 so that "past the end" (0) sorts first
        let key = |i: u32| -> u64 {
            let i = i as usize;
            let second = if i + h < n { rank[i + h] as u64 + 1 } else { 0 };
            ((rank[i] as u64) << 32) | second
        };
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0] as usize] = 0;
        for w in 1..n {
            let bump = (key(sa[w]) != key(sa[w - 1])) as u32;
            next[sa[w] as usize] = next[sa[w - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        h *= 2;
    }
    sa
}

fn kasai(text: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

fn sparse_table(base: Vec<u32>) -> Vec<Vec<u32>> {
    let n = base.len();
    let mut table = vec![base];
    let mut width = 1;
    while 2 * width <= n {
        let prev = table.last().expect("non-empty");
        let row: Vec<u32> = (0..=n - 2 * width).map(|i| prev[i].min(prev[i + width])).collect();
        table.push(row);
        width *= 2;
    }
    table
}
