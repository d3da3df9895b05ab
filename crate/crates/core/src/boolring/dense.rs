//! Dense truth-table kernels over a compressed variable support.
//!
//! A function over `n` variables is stored as `2^n` bits packed into `u64`
//! words. The same in-place Moebius transform maps ANF coefficients to a
//! truth table and back.

const IN_WORD_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Largest support the dense path will allocate for.
pub(crate) const MAX_DENSE_VARS: usize = 22;

pub(crate) fn words_for(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

/// In-place Moebius transform over `n` variables (an involution over F2).
pub(crate) fn moebius(table: &mut [u64], n: usize) {
    debug_assert_eq!(table.len(), words_for(n));
    for (i, &mask) in IN_WORD_MASKS.iter().enumerate().take(n.min(6)) {
        let shift = 1 << i;
        for w in table.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for i in 6..n {
        let stride = 1 << (i - 6);
        let mut base = 0;
        while base < table.len() {
            for j in base..base + stride {
                table[j + stride] ^= table[j];
            }
            base += 2 * stride;
        }
    }
}

/// Maps variable masks onto dense indices for a fixed support.
pub(crate) struct Support {
    vars: Vec<u32>,
}

impl Support {
    pub(crate) fn new(mask: u64) -> Self {
        let mut vars = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            vars.push(m.trailing_zeros());
            m &= m - 1;
        }
        Support { vars }
    }

    pub(crate) fn len(&self) -> usize {
        self.vars.len()
    }

    pub(crate) fn compress(&self, term: u64) -> usize {
        let mut idx = 0usize;
        for (k, &v) in self.vars.iter().enumerate() {
            idx |= (((term >> v) & 1) as usize) << k;
        }
        idx
    }

    pub(crate) fn expand(&self, idx: usize) -> u64 {
        let mut term = 0u64;
        for (k, &v) in self.vars.iter().enumerate() {
            term |= (((idx >> k) & 1) as u64) << v;
        }
        term
    }

    pub(crate) fn table(&self, terms: impl IntoIterator<Item = u64>) -> Vec<u64> {
        let mut t = vec![0u64; words_for(self.len())];
        for term in terms {
            let idx = self.compress(term);
            t[idx >> 6] ^= 1 << (idx & 63);
        }
        t
    }

    pub(crate) fn terms(&self, table: &[u64]) -> Vec<u64> {
        let mut out = Vec::new();
        for (wi, &w) in table.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(self.expand((wi << 6) | b));
                bits &= bits - 1;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_is_an_involution() {
        for n in 0..9 {
            let mut t: Vec<u64> = (0..words_for(n))
                .map(|i| 0x9e37_79b9_7f4a_7c15u64.wrapping_mul(i as u64 + 1))
                .collect();
            if n < 6 {
                t[0] &= (1u64 << (1 << n)) - 1;
            }
            let orig = t.clone();
            moebius(&mut t, n);
            moebius(&mut t, n);
            assert_eq!(t, orig, "n = {n}");
        }
    }

    #[test]
    fn single_variable_truth_table() {
        // ANF "x0" has truth table 0b10 over one variable.
        let mut t = vec![0b10u64];
        moebius(&mut t, 1);
        assert_eq!(t[0], 0b10);
        // ANF "1 + x0" has truth table 0b01.
        let mut t = vec![0b11u64];
        moebius(&mut t, 1);
        assert_eq!(t[0], 0b01);
    }

    #[test]
    fn support_round_trip() {
        let s = Support::new(0b1010_0110);
        assert_eq!(s.len(), 4);
        for idx in 0..16 {
            assert_eq!(s.compress(s.expand(idx)), idx);
        }
    }
}
