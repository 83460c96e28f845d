//! Multiway merge of the sorted column gathers, done as rounds of pairwise
//! merges so each element moves exactly ⌈log₂ k⌉ times. That keeps the move
//! count at n·⌈log₂ k⌉ for n gathered elements across k lists, matching the
//! cost the column kernel is accounted against.

use crate::algebra::Scalar;

/// Merge k index-sorted lists into one index-sorted list, preserving the
/// relative order of equal indices (earlier lists first). Returns the merged
/// list and the number of element moves.
pub fn multiway_merge<T: Scalar>(lists: Vec<Vec<(usize, T)>>) -> (Vec<(usize, T)>, u64) {
    let mut lists: Vec<Vec<(usize, T)>> = lists.into_iter().filter(|l| !l.is_empty()).collect();
    let mut moves = 0u64;
    if lists.is_empty() {
        return (Vec::new(), 0);
    }
    while lists.len() > 1 {
        let mut next = Vec::with_capacity((lists.len() + 1) / 2);
        let mut it = lists.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => {
                    moves += (a.len() + b.len()) as u64;
                    next.push(merge_pair(a, b));
                }
                None => {
                    // odd list passes through; it still moves one level
                    moves += a.len() as u64;
                    next.push(a);
                }
            }
        }
        lists = next;
    }
    (lists.pop().unwrap(), moves)
}

fn merge_pair<T: Scalar>(a: Vec<(usize, T)>, b: Vec<(usize, T)>) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (Some(&(ka, _)), Some(&(kb, _))) => {
                // ties take the left list first, keeping frontier order stable
                if ka <= kb {
                    out.push(ai.next().unwrap());
                } else {
                    out.push(bi.next().unwrap());
                }
            }
            (Some(_), None) => out.push(ai.next().unwrap()),
            (None, Some(_)) => out.push(bi.next().unwrap()),
            (None, None) => break,
        }
    }
    out
}
