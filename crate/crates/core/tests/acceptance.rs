//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bandred::constructions::{
    adjacent_reduction_numbering, down_diagonal_lex, modified_board_numbering, modified_board_text,
    nonadjacent_reduction_numbering, vi_example_board,
};
use bandred::families::{
    complete, complete_bipartite, double_wheel_axis, grid, wheel, DOUBLE_WHEEL_CENTERS,
};
use bandred::numbering::{bandwidth_of_numbering, count_edges_longer_than, length_profile};
use bandred::solve::{
    bandwidth_decision, density_lower_bound, diameter_lower_bound, exact_bandwidth, min_long_edges,
    reduction_by_deletion, reduction_number, vertex_isoperimetric, Answer, Budget, SearchOutcome,
    Status, DEFAULT_VI_CAP,
};
use bandred::suite::{small_corpus, MODIFIED_8X8_K2, NONADJACENT_N6};
use bandred::{Graph, Numbering};
use itertools::Itertools;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> std::result::Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= limit, || {
        format!("took {spent:.2?}, limit {limit:?}")
    })
}

fn optimal(out: &SearchOutcome, want: usize, what: &str) -> std::result::Result<(), String> {
    ensure(out.status == Status::Optimal && out.value == want, || {
        format!(
            "{what}: got {} ({}, lower bound {}), want {want}",
            out.value, out.status, out.lower_bound
        )
    })
}

/// Minimum over all numberings of the number of edges longer than `t`, for
/// every `t < v`, by full permutation enumeration.
fn permutation_minima(g: &Graph) -> Vec<usize> {
    let v = g.vertex_count();
    let edges: Vec<_> = g.edges().collect();
    let mut best = vec![usize::MAX; v];
    for order in (0..v).permutations(v) {
        let mut pos = vec![0; v];
        for (i, &u) in order.iter().enumerate() {
            pos[u] = i;
        }
        for (t, slot) in best.iter_mut().enumerate() {
            let long = edges
                .iter()
                .filter(|&&(a, b)| pos[a].abs_diff(pos[b]) > t)
                .count();
            *slot = (*slot).min(long);
        }
    }
    best
}

fn c1_constructive_bandwidth() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for n in 2..=40 {
        for m in n..=40 {
            let g = grid(m, n).unwrap();
            let b = bandwidth_of_numbering(&g, &down_diagonal_lex(m, n).unwrap()).unwrap();
            ensure(b == n, || format!("grid {m}x{n}: bandwidth {b}"))?;
            count += 1;
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("{count} grids, {:.2?}", start.elapsed()))
}

fn c2_lower_bound() -> Check {
    let start = Instant::now();
    let d = bandwidth_decision(&grid(3, 3).unwrap(), 2, Budget::default()).unwrap();
    ensure(matches!(d.answer, Answer::No), || {
        format!("grid 3x3 at 2: {:?}", d.answer)
    })?;
    let out = exact_bandwidth(&grid(4, 4).unwrap(), Budget::default()).unwrap();
    optimal(&out, 4, "bandwidth of grid 4x4")?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("{:.2?}", start.elapsed()))
}

/// Fewest edges of length exactly `b` among numberings of bandwidth `b`.
fn fewest_at_bandwidth(g: &Graph, b: usize) -> usize {
    let v = g.vertex_count();
    let edges: Vec<_> = g.edges().collect();
    let mut fewest = usize::MAX;
    for order in (1..=v).permutations(v) {
        let lengths = edges.iter().map(|&(a, c)| order[a].abs_diff(order[c]));
        if lengths.clone().max() == Some(b) {
            fewest = fewest.min(lengths.filter(|&l| l == b).count());
        }
    }
    fewest
}

fn c3_equality() -> Check {
    let start = Instant::now();
    for n in 2..=40 {
        for m in n..=40 {
            let g = grid(m, n).unwrap();
            let p = length_profile(&g, &down_diagonal_lex(m, n).unwrap()).unwrap();
            let want = 2 * (n - 1) + n * (m - n);
            ensure(p.count(n) == want, || {
                format!(
                    "grid {m}x{n}: {} edges of length {n}, want {want}",
                    p.count(n)
                )
            })?;
        }
    }
    let f33 = fewest_at_bandwidth(&grid(3, 3).unwrap(), 3);
    ensure(f33 >= 4, || {
        format!("grid 3x3: a bandwidth-3 numbering with {f33} length-3 edges")
    })?;
    let f42 = fewest_at_bandwidth(&grid(4, 2).unwrap(), 2);
    ensure(f42 >= 6, || {
        format!("grid 4x2: a bandwidth-2 numbering with {f42} length-2 edges")
    })?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "minimum at bandwidth: 3x3 {f33}, 4x2 {f42}; {:.2?}",
        start.elapsed()
    ))
}

fn c4_cut_and_flip() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for k in 1..=5 {
        for n in 2 * k + 1..=40 {
            for m in n..=40 {
                let r = modified_board_numbering(m, n, k).unwrap();
                let long = count_edges_longer_than(&r.graph(), &r.numbering, n - k).unwrap();
                ensure(long == m - n + 2 * k, || {
                    format!("(m,n,k)=({m},{n},{k}): {long} edges longer than {}", n - k)
                })?;
                count += 1;
            }
        }
    }
    let board = modified_board_text(8, 8, 2).unwrap();
    ensure(board == MODIFIED_8X8_K2, || {
        format!("8x8 k=2 board differs:\n{board}")
    })?;
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{count} instances, 8x8 board identical; {:.2?}",
        start.elapsed()
    ))
}

fn c5_two_long_edges() -> Check {
    let start = Instant::now();
    for n in 3..=60 {
        let a = adjacent_reduction_numbering(n).unwrap();
        ensure(a.long_edges.len() == 2, || {
            format!("adjacent n={n}: {} long", a.long_edges.len())
        })?;
        let (e, f) = (a.long_edges[0].edge, a.long_edges[1].edge);
        let shared = [e.0, e.1]
            .iter()
            .filter(|x| **x == f.0 || **x == f.1)
            .count();
        let mut lens = a.long_lengths();
        lens.sort_unstable();
        ensure(shared == 1 && lens == [3 * n - 4, 5 * n - 7], || {
            format!("adjacent n={n}: lengths {lens:?}, shared endpoints {shared}")
        })?;

        let b = nonadjacent_reduction_numbering(n).unwrap();
        ensure(b.long_edges.len() == 2, || {
            format!("non-adjacent n={n}: {} long", b.long_edges.len())
        })?;
        let (e, f) = (b.long_edges[0].edge, b.long_edges[1].edge);
        let disjoint = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
        let mut lens = b.long_lengths();
        lens.sort_unstable();
        ensure(disjoint && lens == [3 * n - 5, 5 * n - 8], || {
            format!("non-adjacent n={n}: lengths {lens:?}, disjoint {disjoint}")
        })?;
    }
    let board = nonadjacent_reduction_numbering(6)
        .unwrap()
        .board()
        .to_text();
    ensure(board == NONADJACENT_N6, || {
        format!("n=6 board differs:\n{board}")
    })?;
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "3 <= n <= 60, n=6 board identical; {:.2?}",
        start.elapsed()
    ))
}

fn c6_reduction_lower_bound() -> Check {
    let start = Instant::now();
    let out = reduction_number(&grid(3, 3).unwrap(), 1, Budget::default()).unwrap();
    optimal(&out, 2, "br_1 of grid 3x3")?;
    let del = reduction_by_deletion(&grid(4, 4).unwrap(), 1, Budget::nodes(100_000_000)).unwrap();
    optimal(&del, 2, "deletions for grid 4x4")?;
    Ok(format!(
        "3x3: 2 ({} nodes); 4x4 by deletion: 2 ({} nodes); {:.2?}",
        out.nodes_expanded,
        del.nodes_expanded,
        start.elapsed()
    ))
}

fn c7_tables() -> Check {
    let start = Instant::now();
    let budget = Budget::default();
    let bw = [3, 3, 3, 3, 4, 4, 5, 5];
    let br = [1, 1, 2, 3, 1, 2, 1, 2];
    for (i, m) in (4..=11).enumerate() {
        let g = wheel(m).unwrap();
        optimal(
            &exact_bandwidth(&g, budget).unwrap(),
            bw[i],
            &format!("bandwidth W_{m}"),
        )?;
        optimal(
            &reduction_number(&g, 1, budget).unwrap(),
            br[i],
            &format!("br_1 W_{m}"),
        )?;
    }
    let mut count = 0;
    for m in 1..=7 {
        for n in 1..=m.min(8 - m) {
            let k = m / 2;
            let (want_bw, want_br) = match (m, n) {
                (2, 2) => (2, 1),
                _ if m % 2 == 1 => (k + n, 1),
                _ => (k + n - 1, 2),
            };
            let g = complete_bipartite(m, n).unwrap();
            optimal(
                &exact_bandwidth(&g, budget).unwrap(),
                want_bw,
                &format!("bandwidth B_{m},{n}"),
            )?;
            optimal(
                &reduction_number(&g, 1, budget).unwrap(),
                want_br,
                &format!("br_1 B_{m},{n}"),
            )?;
            count += 1;
        }
    }
    Ok(format!(
        "W_4..W_11 and {count} bipartite graphs; {:.2?}",
        start.elapsed()
    ))
}

fn c8_complete() -> Check {
    let start = Instant::now();
    for n in 2..=7 {
        let g = complete(n).unwrap();
        for k in 1..n {
            let out = min_long_edges(&g, n - 1 - k, Budget::default()).unwrap();
            optimal(&out, k * (k + 1) / 2, &format!("br_{k} K_{n}"))?;
        }
        let d = density_lower_bound(&g);
        ensure(d == n - 1, || format!("density bound K_{n}: {d}"))?;
        if n >= 3 {
            let minus = g.without_edges(&[(0, 1)]).unwrap();
            let d = density_lower_bound(&minus);
            let b = exact_bandwidth(&minus, Budget::default()).unwrap();
            ensure(d == n - 2 && b.value == n - 2, || {
                format!(
                    "K_{n} minus an edge: density bound {d}, bandwidth {}",
                    b.value
                )
            })?;
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("n <= 7; {:.2?}", start.elapsed()))
}

fn c9_double_wheel() -> Check {
    let start = Instant::now();
    let g = double_wheel_axis();
    let d = diameter_lower_bound(&g).unwrap();
    ensure(d == 5, || format!("diameter bound {d}"))?;
    let split = g.without_edges(&[DOUBLE_WHEEL_CENTERS]).unwrap();
    optimal(
        &exact_bandwidth(&split, Budget::default()).unwrap(),
        3,
        "bandwidth without axis",
    )?;
    for k in 1..=2 {
        optimal(
            &reduction_number(&g, k, Budget::default()).unwrap(),
            1,
            &format!("br_{k}"),
        )?;
    }
    let bw = exact_bandwidth(&g, Budget::default()).unwrap();
    Ok(format!(
        "bandwidth {} ({}); {:.2?}",
        bw.value,
        bw.status,
        start.elapsed()
    ))
}

fn c10_isoperimetric() -> Check {
    let start = Instant::now();
    for n in 2..=4 {
        let out = vertex_isoperimetric(&grid(n, n).unwrap(), DEFAULT_VI_CAP).unwrap();
        optimal(&out, n, &format!("vi grid {n}x{n}"))?;
    }
    let (_, e) = vi_example_board();
    let cut = grid(4, 4).unwrap().without_edges(&[e]).unwrap();
    optimal(
        &vertex_isoperimetric(&cut, DEFAULT_VI_CAP).unwrap(),
        3,
        "vi after deletion",
    )?;
    let mut corpus = small_corpus();
    corpus.push(("double wheel".into(), double_wheel_axis()));
    corpus.push(("grid 4x4".into(), grid(4, 4).unwrap()));
    for (name, g) in &corpus {
        let vi = vertex_isoperimetric(g, DEFAULT_VI_CAP).unwrap().value;
        let bw = exact_bandwidth(g, Budget::default()).unwrap();
        ensure(bw.status == Status::Optimal && vi <= bw.value, || {
            format!("{name}: vi {vi}, bandwidth {} ({})", bw.value, bw.status)
        })?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} corpus graphs; {:.2?}",
        corpus.len(),
        start.elapsed()
    ))
}

fn c11_conjecture_evidence() -> Check {
    let start = Instant::now();
    let out = bandred::solve::grid_reduction_number(4, 3, 1, Budget::nodes(1_000_000_000)).unwrap();
    ensure(out.status != Status::Unknown, || {
        "search found no numbering".into()
    })?;
    ensure((1..=3).contains(&out.value), || {
        format!("value {} outside [1, 3]", out.value)
    })?;
    let reading = match (out.status, out.value) {
        (Status::Optimal, 3) => "matches m-n+2k = 3",
        (Status::Optimal, _) => "below m-n+2k = 3",
        _ => "upper bound only",
    };
    Ok(format!(
        "br_1(grid 4x3) = {} ({}, {reading}); {} nodes, {:.2?}",
        out.value,
        out.status,
        out.nodes_expanded,
        start.elapsed()
    ))
}

fn c12_oracle() -> Check {
    let start = Instant::now();
    let corpus = small_corpus();
    for (name, g) in &corpus {
        let minima = permutation_minima(g);
        let oracle_bw = minima.iter().position(|&x| x == 0).unwrap_or(0);
        optimal(
            &exact_bandwidth(g, Budget::default()).unwrap(),
            oracle_bw,
            &format!("{name} bandwidth"),
        )?;
        for (t, &want) in minima.iter().enumerate() {
            let out = min_long_edges(g, t, Budget::default()).unwrap();
            optimal(&out, want, &format!("{name} long edges over {t}"))?;
            if let Some(w) = &out.witness {
                let nu: &Numbering = w.numbering();
                let c = count_edges_longer_than(g, nu, t).unwrap();
                ensure(c == want, || {
                    format!("{name} t={t}: witness has {c} long edges")
                })?;
            }
        }
    }
    Ok(format!("{} graphs; {:.2?}", corpus.len(), start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            "1 down-diagonal bandwidth n, 2 <= n <= m <= 40",
            c1_constructive_bandwidth,
        ),
        (
            "2 grid 3x3 not 2-bandwidth, grid 4x4 bandwidth 4",
            c2_lower_bound,
        ),
        ("3 length-n edge counts and exhaustive floors", c3_equality),
        ("4 cut-and-flip long edges and 8x8 board", c4_cut_and_flip),
        (
            "5 two-long-edge numberings, 3 <= n <= 60",
            c5_two_long_edges,
        ),
        ("6 br_1 of grids 3x3 and 4x4", c6_reduction_lower_bound),
        ("7 wheel and bipartite tables", c7_tables),
        ("8 complete graphs and density bound", c8_complete),
        ("9 double wheel", c9_double_wheel),
        ("10 vertex-isoperimetric numbers", c10_isoperimetric),
        ("11 br_1 of grid 4x3", c11_conjecture_evidence),
        ("12 search vs permutation enumeration", c12_oracle),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
