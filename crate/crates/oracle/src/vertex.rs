//! Set-partition search on the explicit graph.

/// Decides equitable k-colorability by enumerating every set partition of
/// the vertex set into at most `k` blocks (as restricted-growth strings)
/// and checking each one against the definition: blocks must be
/// independent in the explicit complete multipartite graph, and block
/// sizes padded with zeros up to `k` must differ by at most one.
pub(crate) fn k_colorable(parts: &[u64], k: u64) -> bool {
    let total: u64 = parts.iter().sum();
    let n = total as usize;

    let mut part_of = Vec::with_capacity(n);
    for (index, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(index, size as usize));
    }
    // Explicit adjacency: vertices are joined exactly when their parts differ.
    let mut adjacent = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            adjacent[u][v] = part_of[u] != part_of[v];
        }
    }

    let max_blocks = k.min(n as u64) as usize;
    let mut assign = vec![0usize; n];
    search(&mut assign, 0, 0, max_blocks, k, n, &adjacent)
}

fn search(
    assign: &mut [usize],
    index: usize,
    used: usize,
    max_blocks: usize,
    k: u64,
    n: usize,
    adjacent: &[Vec<bool>],
) -> bool {
    if index == n {
        return accepts(assign, used, k, adjacent);
    }
    // Restricted growth: a vertex may join an existing block or open the
    // next fresh one, never skipping block ids.
    let limit = used.min(max_blocks - 1);
    for block in 0..=limit {
        assign[index] = block;
        let used_after = used.max(block + 1);
        if search(assign, index + 1, used_after, max_blocks, k, n, adjacent) {
            return true;
        }
    }
    false
}

fn accepts(assign: &[usize], blocks: usize, k: u64, adjacent: &[Vec<bool>]) -> bool {
    // Independence of every block.
    for u in 0..assign.len() {
        for v in (u + 1)..assign.len() {
            if assign[u] == assign[v] && adjacent[u][v] {
                return false;
            }
        }
    }
    // Equity over all k classes, the absent ones counting as size 0.
    let mut sizes = vec![0u64; blocks];
    for &block in assign {
        sizes[block] += 1;
    }
    let max = *sizes.iter().max().expect("at least one block");
    let min = *sizes.iter().min().expect("at least one block");
    if (blocks as u64) == k {
        max - min <= 1
    } else {
        max <= 1
    }
}
