//! Suffix automaton over integer symbols.

/// Minimal DFA of all factors of a word. State 0 is the initial state.
#[derive(Debug, Clone)]
pub struct SuffixAutomaton {
    states: Vec<State>,
}

#[derive(Debug, Clone)]
struct State {
    len: usize,
    link: Option<usize>,
    /// Sorted by symbol; alphabets here are small.
    next: Vec<(u32, usize)>,
}

impl State {
    fn get(&self, c: u32) -> Option<usize> {
        self.next.binary_search_by_key(&c, |&(s, _)| s).ok().map(|i| self.next[i].1)
    }

    fn set(&mut self, c: u32, to: usize) {
        match self.next.binary_search_by_key(&c, |&(s, _)| s) {
            Ok(i) => self.next[i].1 = to,
            Err(i) => self.next.insert(i, (c, to)),
        }
    }
}

impl SuffixAutomaton {
    pub fn new(text: impl IntoIterator<Item = u32>) -> Self {
        let mut sam = SuffixAutomaton {
            states: vec![State { len: 0, link: None, next: Vec::new() }],
        };
        let mut last = 0;
        for c in text {
            last = sam.extend(last, c);
        }
        sam
    }

    fn extend(&mut self, last: usize, c: u32) -> usize {
        let cur = self.states.len();
        self.states.push(State { len: self.states[last].len + 1, link: None, next: Vec::new() });
        let mut p = Some(last);
        while let Some(v) = p {
            if self.states[v].get(c).is_some() {
                break;
            }
            self.states[v].set(c, cur);
            p = self.states[v].link;
        }
        let Some(v) = p else {
            self.states[cur].link = Some(0);
            return cur;
        };
        let q = self.states[v].get(c).expect("transition exists");
        if self.states[v].len + 1 == self.states[q].len {
            self.states[cur].link = Some(q);
            return cur;
        }
        let clone = self.states.len();
        let mut copy = self.states[q].clone();
        copy.len = self.states[v].len + 1;
        self.states.push(copy);
        let mut p = Some(v);
        while let Some(u) = p {
            if self.states[u].get(c) != Some(q) {
                break;
            }
            self.states[u].set(c, clone);
            p = self.states[u].link;
        }
        self.states[q].link = Some(clone);
        self.states[cur].link = Some(clone);
        cur
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Number of distinct factors of each length `1..=k_max`; index 0 is
    /// unused and left at zero.
    ///
    /// Every non-initial state stands for the factors with lengths in
    /// `(len(link), len]`, one per length, so the counts are an interval
    /// sum over states.
    pub fn counts_by_length(&self, k_max: usize) -> Vec<u64> {
        let mut diff = vec![0i64; k_max + 2];
        for s in &self.states[1..] {
            let lo = self.states[s.link.expect("non-initial state")].len + 1;
            let hi = s.len.min(k_max);
            if lo <= hi {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            }
        }
        let mut counts = vec![0u64; k_max + 1];
        let mut running = 0i64;
        for k in 1..=k_max {
            running += diff[k];
            counts[k] = running as u64;
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_words() {
        let sam = SuffixAutomaton::new("abbb".bytes().map(u32::from));
        // a, b | ab, bb | abb, bbb | abbb
        assert_eq!(sam.counts_by_length(4), vec![0, 2, 2, 2, 1]);
        let sam = SuffixAutomaton::new("abcbc".bytes().map(u32::from));
        assert_eq!(sam.counts_by_length(5), vec![0, 3, 3, 3, 2, 1]);
        assert!(sam.state_count() <= 2 * 5);
    }

    #[test]
    fn empty_text() {
        let sam = SuffixAutomaton::new(std::iter::empty());
        assert_eq!(sam.counts_by_length(0), vec![0]);
    }
}
