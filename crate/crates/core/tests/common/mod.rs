#![allow(dead_code)]

use arrowsimp::Tournament;

/// `s(T)` from the plain boolean matrix: for every candidate `C`, count
/// for each outside vertex how many members of `C` it beats and loses to,
/// and keep the cheaper side. No bit tricks, no pruning.
pub fn naive_arrow_simplicity(t: &Tournament) -> usize {
    let n = t.n();
    let m = t.to_matrix();
    let mut best = usize::MAX;
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        if size < 2 || size > n - 1 {
            continue;
        }
        let mut cost = 0;
        for x in (0..n).filter(|&x| mask >> x & 1 == 0) {
            let beats = (0..n).filter(|&c| mask >> c & 1 == 1 && m[x][c]).count();
            cost += beats.min(size - beats);
        }
        best = best.min(cost);
    }
    best
}

/// True iff some `C` with `2 <= |C| <= n-1` is a module, checked straight
/// from the matrix.
pub fn naive_has_module(t: &Tournament) -> bool {
    let n = t.n();
    let m = t.to_matrix();
    (0u64..1 << n).any(|mask| {
        let size = mask.count_ones() as usize;
        (2..n).contains(&size)
            && (0..n).filter(|&x| mask >> x & 1 == 0).all(|x| {
                let members: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
                members.iter().all(|&c| m[x][c]) || members.iter().all(|&c| m[c][x])
            })
    })
}
