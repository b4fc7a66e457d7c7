//! End-to-end checks shared by the `selftest` subcommand and the acceptance
//! test target. Each criterion returns a short summary or a failure message.

use crate::assignments::{count_assignments, kostka_via_pieri};
use crate::coherent::{self, CartanRange, Method};
use crate::counting::{
    count, count_table, integral_characters, verify, CountOptions, GroupSpec, Nu, OrbitSpec,
};
use crate::diagrams::{enumerate_partitions, YoungDiagram};
use crate::paintings::{brute_force_paintings, count_paintings, count_paintings_a_signature, enumerate_paintings, PaintingType};
use crate::symchar::{self, HyperoctChar};

pub type Outcome = std::result::Result<String, String>;

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub run: fn() -> Outcome,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: "1", title: "worked examples", run: worked_examples },
        Criterion { id: "2", title: "formula equals character oracle", run: dual_path },
        Criterion { id: "3", title: "hyperoctahedral branching from class data", run: branching },
        Criterion { id: "4", title: "assignment counts equal Pieri paths", run: kostka },
        Criterion { id: "5", title: "chain enumeration equals brute force", run: painting_brute_force },
        Criterion { id: "6", title: "non-integral recursion", run: non_integral },
        Criterion { id: "7", title: "regression guards", run: regression_guards },
    ]
}

fn yd(rows: &[usize]) -> YoungDiagram {
    YoungDiagram::new(rows.to_vec()).expect("literal partition")
}

fn nu(s: &str) -> Nu {
    Nu::parse(s).expect("literal coordinates")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn count_at(group: GroupSpec, nu: &Nu, orbit: &str, opts: &CountOptions) -> std::result::Result<u64, String> {
    let orbit: OrbitSpec = orbit.parse().map_err(|e| format!("{e}"))?;
    count(group, nu, &orbit, opts).map(|r| r.count).map_err(|e| format!("{e}"))
}

fn table_of(group: GroupSpec, nu: &Nu) -> std::result::Result<Vec<(String, u64)>, String> {
    Ok(count_table(group, nu, &CountOptions::default())
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|(_, r)| r.count > 0)
        .map(|(o, r)| (o.to_string(), r.count))
        .collect())
}

fn worked_examples() -> Outcome {
    let o = CountOptions::default();
    for n in 1..=8 {
        let regular = (0..n).map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        let got = count_at(GroupSpec::Glr(n), &nu(&regular), &format!("[{n}]"), &o)?;
        expect_eq(&format!("GLR({n}) principal orbit"), got, n as u64 + 1)?;
    }

    let h1 = nu("1,1,1,2,2,2,3,3");
    expect_eq("GLH(8) at [4,4]", count_at(GroupSpec::Glh(8), &h1, "[4,4]", &o)?, 1)?;
    expect_eq("GLH(8) table", table_of(GroupSpec::Glh(8), &h1)?, vec![("[4,4]".into(), 1)])?;
    let h2 = nu("1,1,1,1,2,2,2,3,3,4");
    expect_eq(
        "GLH(10) table",
        table_of(GroupSpec::Glh(10), &h2)?,
        vec![("[5,5]".into(), 2), ("[4,4,1,1]".into(), 1)],
    )?;

    for n in 2..=6 {
        let regular = (0..n).map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        let hook = format!("[2{}]", ",1".repeat(n - 2));
        let got = count_at(GroupSpec::Glc(n), &nu(&format!("{regular};{regular}")), &format!("{hook}|{hook}"), &o)?;
        expect_eq(&format!("GLC({n}) at {hook}"), got, ((n - 1) * (n - 1)) as u64)?;
    }

    let u = nu("1,1,2");
    let got: Vec<u64> = ["[3]", "[2,1]", "[1,1,1]"]
        .iter()
        .map(|o| count_at(GroupSpec::U(2, 1), &u, o, &CountOptions::default()))
        .collect::<std::result::Result<_, _>>()?;
    expect_eq("U(2,1) at [3],[2,1],[1,1,1]", got, vec![1, 2, 0])?;
    Ok("GLR n+1 for n<=8, GLH tables, GLC (n-1)^2 for n<=6, U(2,1) = 1,2,0".into())
}

fn dual_path() -> Outcome {
    let opts = CountOptions::default();
    let mut groups: Vec<GroupSpec> = (1..=7).map(GroupSpec::Glr).collect();
    groups.extend((2..=8).step_by(2).map(GroupSpec::Glh));
    groups.extend((1..=5).map(GroupSpec::Glc));
    for n in 1..=6 {
        groups.extend((0..=n).map(|p| GroupSpec::U(p, n - p)));
    }
    let mut checked = 0usize;
    for &g in &groups {
        for nu in integral_characters(g, &opts) {
            let report = verify(g, &nu, &opts).map_err(|e| e.to_string())?;
            if let Some(row) = report.first_mismatch() {
                return Err(format!("{g} nu={nu} orbit {}: formula {} oracle {}", row.orbit, row.formula, row.oracle));
            }
            checked += report.rows.len();
        }
    }

    for n in 0..=8 {
        let glr = coherent::coh_glr(n, Method::Oracle);
        let glh = (n % 2 == 0).then(|| coherent::coh_glh(n, Method::Oracle).expect("even"));
        let half = (n % 2 == 0).then(|| coherent::coh_u_half(n / 2, Method::Oracle));
        let us: Vec<_> = (0..=n).map(|p| coherent::coh_u(p, n - p, Method::Strips)).collect();
        for shape in enumerate_partitions(n) {
            expect_eq(&format!("GLR mult at {shape}"), glr.get(&shape), count_paintings(&shape, PaintingType::AR))?;
            let ah = count_paintings(&shape, PaintingType::AH);
            expect_eq(&format!("GLH mult at {shape}"), glh.as_ref().map_or(0, |c| c.get(&shape)), ah)?;
            let deg = count_paintings(&shape, PaintingType::ADegenerate);
            expect_eq(&format!("U half mult at {shape}"), half.as_ref().map_or(0, |c| c.get(&shape)), deg)?;
            for (p, u) in us.iter().enumerate() {
                let want = count_paintings_a_signature(&shape, p, n - p).expect("sizes agree");
                expect_eq(&format!("U({p},{}) mult at {shape}", n - p), u.get(&shape), want)?;
            }
        }
    }
    Ok(format!("{checked} orbit counts agree; painting identities hold for |shape| <= 8"))
}

fn branching() -> Outcome {
    for r in 1..=5 {
        let eps = symchar::decompose(&symchar::hyperoct_induced(r, HyperoctChar::Eps));
        let triv = symchar::decompose(&symchar::hyperoct_induced(r, HyperoctChar::Triv));
        for shape in enumerate_partitions(2 * r) {
            expect_eq(&format!("eps at {shape}"), eps.get(&shape), u64::from(shape.all_columns_even()))?;
            expect_eq(&format!("triv at {shape}"), triv.get(&shape), u64::from(shape.all_rows_even()))?;
        }
    }
    Ok("even-column and even-row sums for r <= 5".into())
}

fn kostka() -> Outcome {
    let mut pairs = 0;
    for n in 0..=9 {
        let parts = enumerate_partitions(n);
        for shape in &parts {
            for content in &parts {
                let a = count_assignments(shape, content).map_err(|e| e.to_string())?;
                let b = kostka_via_pieri(shape, content).map_err(|e| e.to_string())?;
                expect_eq(&format!("K({shape}, {content})"), a, b)?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs with |shape| <= 9"))
}

fn painting_brute_force() -> Outcome {
    let types = [PaintingType::AR, PaintingType::AH, PaintingType::A, PaintingType::ADegenerate];
    for n in 0..=6 {
        for shape in enumerate_partitions(n) {
            let all = brute_force_paintings(&shape, None);
            for t in types {
                let mut brute: Vec<_> = all.iter().filter(|p| crate::paintings::has_type(p, t)).cloned().collect();
                brute.sort_by_key(|p| p.chain());
                expect_eq(&format!("{t:?} paintings of {shape}"), enumerate_paintings(&shape, t), brute)?;
            }
        }
    }
    Ok("all four types for |shape| <= 6".into())
}

fn non_integral() -> Outcome {
    expect_eq("GLR(2) nu=(0,1/2)", table_of(GroupSpec::Glr(2), &nu("0,1/2"))?, vec![("[2]".into(), 4)])?;
    expect_eq("U(1,1) nu=(x,-x+1)", table_of(GroupSpec::U(1, 1), &nu("x,-x+1"))?, vec![("[2]".into(), 1)])?;
    expect_eq("GLH(4) nu=(0,1,2,1/2)", table_of(GroupSpec::Glh(4), &nu("0,1,2,1/2"))?, vec![])?;
    expect_eq("GLC(2) nu=(0,1;1/2,3/2)", table_of(GroupSpec::Glc(2), &nu("0,1;1/2,3/2"))?, vec![])?;
    Ok("GLR(2), U(1,1) generic pair, GLH odd block, GLC unmatched".into())
}

fn regression_guards() -> Outcome {
    // Printed Cartan range s <= floor(min(p,q)/2) loses the s = 1 term of U(2,1).
    let wanted: Vec<u64> = ["[3]", "[2,1]", "[1,1,1]"]
        .iter()
        .map(|o| count_paintings_a_signature(&o.parse().unwrap(), 2, 1).unwrap())
        .collect();
    let range = |r| {
        let c = coherent::coh_u_with_range(2, 1, Method::Strips, r);
        [yd(&[3]), yd(&[2, 1]), yd(&[1, 1, 1])].iter().map(|s| c.get(s)).collect::<Vec<_>>()
    };
    expect_eq("full Cartan range", range(CartanRange::Full), wanted.clone())?;
    if range(CartanRange::Halved) == wanted {
        return Err("halved Cartan range unexpectedly reproduces the U(2,1) paintings".into());
    }

    // Without negating the second block, the generic U(1,1) pair counts nothing.
    let g = GroupSpec::U(1, 1);
    let v = nu("x,-x+1");
    let with = count_at(g, &v, "[2]", &CountOptions::default())?;
    let without = count_at(g, &v, "[2]", &CountOptions { glc_negation: false, ..Default::default() })?;
    expect_eq("U(1,1) generic pair with negation", with, 1)?;
    expect_eq("U(1,1) generic pair without negation", without, 0)?;
    Ok(format!("halved range gives {:?}, unnegated pair gives {without}", range(CartanRange::Halved)))
}

/// Runs every criterion, calling `report` after each. Returns whether all passed.
pub fn run_all(mut report: impl FnMut(&Criterion, &Outcome)) -> bool {
    let mut ok = true;
    for c in criteria() {
        let outcome = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        ok &= outcome.is_ok();
        report(&c, &outcome);
    }
    ok
}
