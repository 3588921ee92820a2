//! Words in a free group: nonzero signed generator indices, 1-based.

pub type Letter = i32;
pub type Word = Vec<Letter>;

/// Concatenate with free cancellation.
pub fn reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        debug_assert!(l != 0);
        if matches!(out.last(), Some(&last) if last == -l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn concat(a: &[Letter], b: &[Letter]) -> Word {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    reduce(&w)
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Exponent sum over all generators (the abelianization weight when every
/// generator maps to 1).
pub fn weight(w: &[Letter]) -> i64 {
    w.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
}

/// Replace every occurrence of generator `g` by `replacement` (and `g^-1` by
/// its inverse), then freely reduce.
pub fn substitute(w: &[Letter], g: Letter, replacement: &[Letter]) -> Word {
    debug_assert!(g > 0);
    let inv = inverse(replacement);
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        let piece: &[Letter] = if l == g {
            replacement
        } else if l == -g {
            &inv
        } else {
            std::slice::from_ref(&l)
        };
        for &x in piece {
            if matches!(out.last(), Some(&last) if last == -x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert_eq!(reduce(&[1, 2, -2, 3]), vec![1, 3]);
        assert_eq!(reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(concat(&[1, 2], &[-2, -1]), Vec::<i32>::new());
    }

    #[test]
    fn substitution() {
        // replace 2 by [3, 1] in 1 2 -2 2 -3
        assert_eq!(substitute(&[1, 2, -3], 2, &[3, 1]), vec![1, 3, 1, -3]);
        assert_eq!(substitute(&[2, -2], 2, &[3, 1]), Vec::<i32>::new());
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&[1, -2, 3, -4]), 0);
        assert_eq!(weight(&[1, 2]), 2);
    }
}
