use gl11_vacuum::qseries::{count_hook_diagrams, enumerate_pp, pp_series};
use gl11_vacuum::schur::{lr_coefficient, lr_expand, schur, sym_vars, Partition};

fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(|k| Partition::all(k, None, None)).collect()
}

/// LR coefficient by choosing, row by row, how many of each letter go in the
/// row of `lambda / mu` (rows are weakly increasing, so the counts determine
/// the row), then checking columns and the lattice condition.
fn lr_by_row_contents(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    let letters = nu.len();
    let rows = lambda.len();
    fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in compositions(total - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn rec(
        row: usize,
        rows: usize,
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
        letters: usize,
        filled: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
    ) -> u64 {
        if row == rows {
            return (used.iter().zip(nu.parts()).all(|(u, n)| u == n)) as u64;
        }
        let start = mu.part(row + 1);
        let len = lambda.part(row + 1) - start;
        let mut total = 0;
        for counts in compositions(len, letters) {
            let mut cells = Vec::new();
            for (x, &c) in counts.iter().enumerate() {
                cells.extend(std::iter::repeat_n(x as u32 + 1, c as usize));
            }
            // strict columns against the row above
            let ok_cols = row == 0 || {
                let above = &filled[row - 1];
                let above_start = mu.part(row) as usize;
                cells.iter().enumerate().all(|(k, &x)| {
                    let col = start as usize + k;
                    col < above_start || above.get(col - above_start).is_none_or(|&a| a < x)
                })
            };
            if !ok_cols {
                continue;
            }
            // lattice condition, reading this row right to left
            let mut u = used.clone();
            let mut lattice = true;
            for &x in cells.iter().rev() {
                u[x as usize - 1] += 1;
                if u[x as usize - 1] > nu.part(x as usize) || (x > 1 && u[x as usize - 1] > u[x as usize - 2]) {
                    lattice = false;
                    break;
                }
            }
            if !lattice {
                continue;
            }
            let saved = std::mem::replace(used, u);
            filled.push(cells);
            total += rec(row + 1, rows, mu, lambda, nu, letters, filled, used);
            filled.pop();
            *used = saved;
        }
        total
    }
    let mut used = vec![0; letters];
    rec(0, rows, mu, lambda, nu, letters, &mut Vec::new(), &mut used)
}

#[test]
fn littlewood_richardson_agrees_with_tableaux() {
    for mu in partitions_up_to(8) {
        for nu in partitions_up_to(8 - mu.weight()) {
            let table = lr_expand(&mu, &nu);
            for lambda in Partition::all(mu.weight() + nu.weight(), None, None) {
                let expect = lr_by_row_contents(&mu, &nu, &lambda);
                assert_eq!(
                    table.get(&lambda).copied().unwrap_or(0),
                    expect,
                    "c^{lambda}_{{{mu},{nu}}}"
                );
            }
        }
    }
}

#[test]
fn pieri_rule() {
    for mu in partitions_up_to(5) {
        for k in 0..=3 {
            let row = Partition::new(vec![k]).unwrap();
            for lambda in Partition::all(mu.weight() + k, None, None) {
                let strip = lambda.contains(&mu)
                    && (1..=lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i));
                assert_eq!(lr_coefficient(&mu, &row, &lambda), strip as u64, "{mu} x ({k}) -> {lambda}");
            }
        }
    }
}

/// Semistandard tableaux of shape `lambda` with content `alpha`.
fn kostka(lambda: &Partition, alpha: &[u32]) -> u64 {
    // place letters 1, 2, .. in turn as horizontal strips
    fn rec(shape: Partition, lambda: &Partition, alpha: &[u32]) -> u64 {
        let Some((&a, rest)) = alpha.split_first() else {
            return (&shape == lambda) as u64;
        };
        let mut total = 0;
        for next in Partition::all(shape.weight() + a, None, None) {
            let strip = next.contains(&shape)
                && lambda.contains(&next)
                && (1..=next.len()).all(|i| next.part(i + 1) <= shape.part(i));
            if strip {
                total += rec(next, lambda, rest);
            }
        }
        total
    }
    rec(Partition::empty(), lambda, alpha)
}

#[test]
fn schur_coefficients_are_kostka_numbers() {
    let n = 3;
    let vars = sym_vars(n);
    for lambda in partitions_up_to(5) {
        if lambda.len() > n {
            continue;
        }
        let s = schur(&lambda, n);
        let w = lambda.weight();
        for a in 0..=w {
            for b in 0..=w - a {
                let alpha = [a, b, w - a - b];
                let c = s.coefficient_in(&vars, &alpha).constant_term();
                assert_eq!(c.to_i64(), Some(kostka(&lambda, &alpha) as i64), "{lambda} at {alpha:?}");
            }
        }
    }
}

fn in_hook(p: &Partition, m: u32, n: u32) -> bool {
    p.part(m as usize + 1) <= n
}

/// Chains `lambda_1 >= lambda_2 >= ..` of nonempty hook diagrams with the
/// given total size.
fn brute_plane_partitions(m: u32, n: u32, volume: u32) -> u64 {
    fn rec(prev: Option<&Partition>, left: u32, m: u32, n: u32) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for size in 1..=left {
            for p in Partition::all(size, None, None) {
                if in_hook(&p, m, n) && prev.is_none_or(|q| q.contains(&p)) {
                    total += rec(Some(&p), left - size, m, n);
                }
            }
        }
        total
    }
    rec(None, volume, m, n)
}

#[test]
fn plane_partitions_match_brute_force() {
    for (m, n) in [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
        for v in 0..=7 {
            assert_eq!(enumerate_pp(m, n, v) as u64, brute_plane_partitions(m, n, v), "({m},{n}) volume {v}");
        }
        let s = pp_series(m, n, 7);
        for v in 0..=7 {
            assert_eq!(*s.coeff(v), num_bigint::BigInt::from(brute_plane_partitions(m, n, v)));
        }
    }
}

#[test]
fn hook_diagram_counts() {
    // the (0,0)-hook is empty, the (1,1)-hook holds hooks only
    assert_eq!(count_hook_diagrams(0, 0, 0), 1);
    assert_eq!(count_hook_diagrams(0, 0, 3), 0);
    for size in 1..=8 {
        assert_eq!(count_hook_diagrams(1, 1, size), size as u64);
    }
}
