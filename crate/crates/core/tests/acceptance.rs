//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::time::Instant;

use domino_core::insertion::{insertion_frames, GrowthDiagram, SignedPermutationMatrix};
use domino_core::partition::{Domino, Partition};
use domino_core::tableau::DominoTableau;
use domino_core::verify::{self, VerificationReport};
use domino_core::words::{parse_word, ColoredPermutation};

fn frame(pairs: &[(u32, Domino)]) -> DominoTableau {
    pairs.iter().fold(DominoTableau::empty(Partition::empty()), |d, &(v, dom)| d.with_entry(v, dom).unwrap())
}

fn shape(s: &str) -> Partition {
    s.parse().unwrap()
}

fn running_example() -> Vec<VerificationReport> {
    let word = parse_word("3' 4 2 1'").unwrap();
    let frames = insertion_frames(&word, 0).unwrap();
    let last = frame(&[
        (1, Domino::vertical(1, 1)),
        (2, Domino::vertical(1, 2)),
        (3, Domino::horizontal(3, 1)),
        (4, Domino::vertical(1, 3)),
    ]);
    let p = frames.last().unwrap();
    let pi = ColoredPermutation::new(word).unwrap();
    let g = GrowthDiagram::forward(&SignedPermutationMatrix::from_permutation(pi), 0).unwrap();
    let expected_p: Vec<Partition> = ["", "1,1", "2,2", "2,2,2", "3,3,2"].iter().map(|s| shape_or_empty(s)).collect();
    let expected_q: Vec<Partition> = ["", "1,1", "3,1", "3,3", "3,3,2"].iter().map(|s| shape_or_empty(s)).collect();
    vec![
        VerificationReport::new("example", "P shape", &[], p.shape(), shape("3,3,2")),
        VerificationReport::new("example", "final frame", &[], serde_json::to_string(p).unwrap(), serde_json::to_string(&last).unwrap()),
        VerificationReport::new("example", "P chain", &[], format!("{:?}", g.p_chain()), format!("{expected_p:?}")),
        VerificationReport::new("example", "Q chain", &[], format!("{:?}", g.q_chain()), format!("{expected_q:?}")),
    ]
}

fn shape_or_empty(s: &str) -> Partition {
    if s.is_empty() {
        Partition::empty()
    } else {
        shape(s)
    }
}

fn grid(ns: std::ops::RangeInclusive<usize>, rs: &[usize], f: fn(usize, usize) -> Vec<VerificationReport>) -> Vec<VerificationReport> {
    ns.flat_map(|n| rs.iter().flat_map(move |&r| f(n, r))).collect()
}

type Criterion = Box<dyn Fn() -> Vec<VerificationReport>>;

fn main() {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("running example", Box::new(running_example)),
        ("standard bijection", Box::new(|| grid(1..=4, &[0, 1, 2], verify::standard_bijection))),
        ("bumping agrees with growth", Box::new(|| grid(1..=4, &[0, 1, 2], verify::bumping_matches_growth))),
        ("color to spin", Box::new(|| grid(1..=4, &[0, 1, 2], verify::color_to_spin))),
        (
            "semistandard bijection",
            Box::new(|| (0..=4).flat_map(|n| [0, 1].into_iter().flat_map(move |r| verify::semistandard_checks(n, 2, r))).collect()),
        ),
        (
            "dual correspondences",
            Box::new(|| (0..=3).flat_map(|n| [0, 1].into_iter().flat_map(move |r| verify::dual_checks(n, 2, r))).collect()),
        ),
        ("ascent lemmas", Box::new(|| grid(4..=4, &[0, 1, 2], verify::ascent_lemmas))),
        ("symmetric growth", Box::new(|| grid(0..=4, &[0, 1, 2], verify::symmetric_growth))),
        (
            "ov - ev",
            Box::new(|| (0..=5).flat_map(|n| [0, 1, 2].map(|r| verify::ovev(n, r))).collect()),
        ),
        (
            "enumerative identities",
            Box::new(|| {
                let mut out: Vec<_> = (0..=4).flat_map(|n| [0, 1, 2].map(|r| verify::spin_square_sum(n, r))).collect();
                out.extend((0..=4).flat_map(|n| verify::involution_polynomial(n, &[0, 1, 2])));
                out.extend((5..=6).flat_map(|n| verify::involution_polynomial(n, &[0])));
                out.extend((0..=8).flat_map(verify::classical));
                out.extend(verify::spin_polynomial_examples());
                out
            }),
        ),
        (
            "sign-imbalance",
            Box::new(|| {
                let mut out: Vec<_> = (1..=8).flat_map(verify::sign_checks).collect();
                out.extend(grid(0..=4, &[0, 1], verify::symmetric_growth).into_iter().filter(|r| r.identity.starts_with("sign")));
                out
            }),
        ),
        (
            "series identities",
            Box::new(|| {
                let mut out = verify::domino_function_examples();
                out.extend([0, 1, 2].into_iter().flat_map(|r| verify::cauchy(r, 2, 3)));
                out.extend([0, 1, 2].map(|r| verify::series_product(r, 2, 4)));
                out.extend(verify::series_core_independence(&[0, 1, 2], 2, 4));
                out.extend(verify::specializations(2, 4));
                out
            }),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let reports = run();
        let bad: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
        let status = if bad.is_empty() && !reports.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {name} ({} checks, {:.2}s)",
            i + 1,
            reports.len(),
            start.elapsed().as_secs_f64()
        );
        for r in &bad {
            println!("    {} [{}]: {} != {}", r.identity, r.params_string(), r.lhs, r.rhs);
        }
        failed += (status == "FAIL") as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
