//! Words in the surface group.
//!
//! The ambient group is `<a1, b1, ..., ag, bg | [a1,b1]...[ag,bg]>`, with
//! letters encoded as nonzero `i32` values: generator `k` is `k`, its
//! inverse `-k`. For genus at least 2 the presentation satisfies the small
//! cancellation condition needed for Dehn's algorithm, so the word problem
//! is a terminating rewriting process: free-reduce, then replace any
//! subword longer than half a relator cycle with the inverse of its
//! complement.

/// Free reduction.
pub fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        debug_assert!(l != 0);
        if let Some(&last) = out.last() {
            if last == -l {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    out
}

/// Cyclic reduction of a freely reduced word.
pub fn cyclic_reduce(mut word: Vec<i32>) -> Vec<i32> {
    loop {
        if word.len() >= 2 && word[0] == -*word.last().unwrap() {
            word.pop();
            word.remove(0);
            word = free_reduce(&word);
        } else {
            return word;
        }
    }
}

pub fn inverse(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&l| -l).collect()
}

pub fn concat(a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut w = Vec::with_capacity(a.len() + b.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    free_reduce(&w)
}

/// The standard relator `a1 b1 a1' b1' ... ag bg ag' bg'` as letters.
pub fn relator(genus: u32) -> Vec<i32> {
    let mut r = Vec::with_capacity(4 * genus as usize);
    for k in 0..genus as i32 {
        let a = 2 * k + 1;
        let b = 2 * k + 2;
        r.extend_from_slice(&[a, b, -a, -b]);
    }
    r
}

/// All cyclic rotations of the relator and its inverse.
fn relator_cycles(genus: u32) -> Vec<Vec<i32>> {
    let r = relator(genus);
    let ri = inverse(&r);
    let n = r.len();
    let mut cycles = Vec::with_capacity(2 * n);
    for base in [r, ri] {
        for s in 0..n {
            let mut rot = base[s..].to_vec();
            rot.extend_from_slice(&base[..s]);
            cycles.push(rot);
        }
    }
    cycles
}

/// Dehn-reduce a word: the result is freely reduced and contains no subword
/// matching more than half of a relator cycle. The empty result certifies
/// triviality in the surface group; a nonempty result certifies
/// nontriviality.
pub fn dehn_reduce(word: &[i32], genus: u32) -> Vec<i32> {
    let cycles = relator_cycles(genus);
    let half = 2 * genus as usize; // replace matches of length > half
    let mut w = free_reduce(word);
    'outer: loop {
        let n = w.len();
        if n <= half {
            return w;
        }
        for start in 0..n {
            for cyc in &cycles {
                // Longest common prefix of w[start..] with cyc.
                let mut len = 0;
                while len < cyc.len() && start + len < n && w[start + len] == cyc[len] {
                    len += 1;
                }
                if len > half {
                    // w[start..start+len] == cyc[..len]; replace with the
                    // inverse of the complement cyc[len..].
                    let mut repl = inverse(&cyc[len..]);
                    let mut new_w = w[..start].to_vec();
                    new_w.append(&mut repl);
                    new_w.extend_from_slice(&w[start + len..]);
                    w = free_reduce(&new_w);
                    continue 'outer;
                }
            }
        }
        return w;
    }
}

/// Word problem in the closed-surface group.
pub fn is_trivial_surface(word: &[i32], genus: u32) -> bool {
    dehn_reduce(word, genus).is_empty()
}

/// Word problem in the free group (the once-punctured surface).
pub fn is_trivial_free(word: &[i32]) -> bool {
    free_reduce(word).is_empty()
}

/// Letter of polygon side `i` of the `4g`-gon with boundary word
/// `a1 b1 a1' b1' ...`: generator index with sign.
fn polygon_side_label(i: usize) -> i32 {
    let k = (i / 4) as i32;
    match i % 4 {
        0 => 2 * k + 1,
        1 => 2 * k + 2,
        2 => -(2 * k + 1),
        _ => -(2 * k + 2),
    }
}

/// The partner side carrying the same edge with the opposite exponent.
pub fn polygon_partner_side(i: usize) -> usize {
    match i % 4 {
        0 => i + 2,
        1 => i + 2,
        2 => i - 2,
        _ => i - 2,
    }
}

/// Deck transformations of the polygon development: crossing out of the
/// base polygon through side `j` lands in the copy labelled by the element
/// `(x_1 .. x_{j+1}) * (x_1 .. x_{j'})^{-1}` where `x_i` are the boundary
/// labels and `j'` is the partner side of `j` (both 0-based here). A
/// transverse loop's class is the product of these letters in crossing
/// order; crossings of the cone diagonals contribute nothing.
pub fn side_exit_words(genus: u32) -> Vec<Vec<i32>> {
    let n = 4 * genus as usize;
    // prefix[j] = x_1 .. x_j (so prefix[0] = empty).
    let mut prefix: Vec<Vec<i32>> = Vec::with_capacity(n + 1);
    prefix.push(Vec::new());
    for i in 0..n {
        let mut w = prefix[i].clone();
        w.push(polygon_side_label(i));
        prefix.push(free_reduce(&w));
    }
    (0..n)
        .map(|j| {
            let jp = polygon_partner_side(j);
            concat(&prefix[j + 1], &inverse(&prefix[jp]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_is_trivial() {
        for g in 2..=4 {
            assert!(is_trivial_surface(&relator(g), g));
            assert!(!is_trivial_free(&relator(g)));
        }
    }

    #[test]
    fn conjugate_of_relator_is_trivial() {
        let g = 2;
        let mut w = vec![2, 1, -2];
        w.extend(relator(g));
        w.extend(vec![2, -1, -2]);
        assert!(is_trivial_surface(&w, g));
    }

    #[test]
    fn generator_is_nontrivial() {
        assert!(!is_trivial_surface(&[1], 2));
        assert!(!is_trivial_surface(&[1, 2, -1], 2));
    }

    #[test]
    fn relator_squared_is_trivial() {
        let g = 2;
        let mut w = relator(g);
        w.extend(relator(g));
        assert!(is_trivial_surface(&w, g));
    }

    #[test]
    fn commutator_of_a1_b1_alone_nontrivial() {
        // [a1, b1] is half the genus-2 relator, not trivial by itself.
        assert!(!is_trivial_surface(&[1, 2, -1, -2], 2));
    }
}
