//! Acceptance report: one line per criterion.
//!
//! Run with `cargo test --test acceptance`; add `-- --ignored` (or set
//! `SPERNER_SLOW=1`) for the slow opt-in cases. A criterion whose published
//! value disagrees with the mathematics is reported as FAIL with the reason;
//! the process exits non-zero only when an outcome differs from the analysed
//! one, so a regression still breaks the build.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;

use sperner::bigcomb::{afsb, binom, fsb, left_adjoint, parse_bignat, Fsb, MonotoneFn, NamedFn, DEFAULT_ADJOINT_EVALS};
use sperner::decimal::{ratio, scientific};
use sperner::estimates::{asp_bracket, lo_s_v, lo_s_w, up_s_v, up_s_w, Pattern};
use sperner::genset::{direct_power, gmin_bruteforce, gmin_power, DEFAULT_BRUTE_CAP};
use sperner::oracle::{g0_argmin_check, gamma_count, gamma_enumerate, sp_exhaustive, GammaReading, OracleConfig};
use sperner::poset::{are_isomorphic, down_set_lattice, join_irreducibles, DistLattice, Poset};
use sperner::sperner::{Kind, PosetProfile};
use sperner::witness::{certify, witness_bounded, witness_v, witness_w};
use sperner::Subset;

/// Outcome of one criterion.
enum Outcome {
    Pass(String),
    /// The literal criterion is not met for the stated, analysed reason;
    /// everything else in the criterion was checked and holds.
    KnownFail(String),
    /// Unexpected: something the implementation should deliver is wrong.
    Broken(String),
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// `|x - m * 10^exp| <= 10^(exp - (sig - 1))`: one unit in the `sig`-th
/// significant digit of the printed mantissa `m` (e.g. "2.848220").
fn within_sig_unit(x: &BigUint, mantissa: &str, exp: u32, sig: u32) -> bool {
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits: BigUint = format!("{int}{frac}").parse().unwrap();
    let printed = digits * BigUint::from(10u32).pow(exp - frac.len() as u32);
    let unit = BigUint::from(10u32).pow(exp - (sig - 1));
    let diff = if *x >= printed { x - &printed } else { &printed - x };
    diff <= unit
}

fn check(ok: bool, what: impl Into<String>, failures: &mut Vec<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn verdict(failures: Vec<String>, detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome::Pass(detail)
    } else {
        Outcome::Broken(failures.join("; "))
    }
}

const T1_LO: [u64; 28] = [
    1, 1, 2, 6, 9, 17, 36, 66, 120, 234, 456, 876, 1680, 3625, 6340, 12330, 23960, 46766, 91224, 178388, 348656,
    683130, 1337896, 2625364, 5149872, 10119348, 19877904, 39104856,
];
const T1_UP: [u64; 28] = [
    1, 2, 3, 6, 10, 20, 37, 70, 132, 252, 480, 924, 1775, 3432, 6630, 12870, 24967, 48620, 94631, 184756, 360554,
    705432, 1379671, 2704156, 5298418, 10400600, 20410200, 40116600,
];

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut mismatches = Vec::new();
    let mut matched = 0;
    for (i, n) in (3u64..=30).enumerate() {
        let (lo, up) = (lo_s_w(n), up_s_w(n));
        for (side, got, printed) in [("loS", &lo, T1_LO[i]), ("upS", &up, T1_UP[i])] {
            if *got == big(printed) {
                matched += 1;
            } else {
                mismatches.push((n, side, got.clone(), printed));
            }
        }
        check(lo <= up, format!("loS(W,{n}) > upS(W,{n})"), &mut failures);
        let witnesses = if n <= 16 { Some(witness_w(n as usize).unwrap().len()) } else { None };
        if let Some(w) = witnesses {
            check(big(w as u64) == lo, format!("construction size differs from loS(W,{n})"), &mut failures);
        }
    }
    // The only disagreement is n = 16 on the lower side: the formula (and the
    // explicit construction, counted above) gives 3265, the table shows 3625.
    let expected = mismatches.len() == 1 && {
        let (n, side, got, printed) = &mismatches[0];
        *n == 16 && *side == "loS" && *got == big(3265) && *printed == 3625
    };
    check(expected, format!("unexpected mismatches {mismatches:?}"), &mut failures);
    if !failures.is_empty() {
        return Outcome::Broken(failures.join("; "));
    }
    Outcome::KnownFail(format!(
        "{matched}/56 printed values reproduced; n=16 loS: formula and explicit family give 3265, table prints 3625 \
         (transposed digits; 3625 would exceed upS(W,16)=3432). loS <= upS holds for every n"
    ))
}

fn criterion_2() -> Outcome {
    let up_exp = [3u64, 4, 5, 6, 6, 6, 7, 7, 7, 7, 8, 8, 8, 8, 8];
    let lo_exp = [3u64, 5, 6, 6, 6, 6, 7, 7, 7, 8, 8, 8, 8, 8, 8];
    let mut failures = Vec::new();
    for k in 1..=15u64 {
        let kb = big(k);
        let up = left_adjoint(&Pattern::W.upper_fn(), &kb, DEFAULT_ADJOINT_EVALS).unwrap();
        let lo = left_adjoint(&Pattern::W.lower_fn(), &kb, DEFAULT_ADJOINT_EVALS).unwrap();
        check(up == up_exp[k as usize - 1], format!("upS*(W,{k}) = {up}"), &mut failures);
        check(lo == lo_exp[k as usize - 1], format!("loS*(W,{k}) = {lo}"), &mut failures);
    }
    verdict(failures, "30/30 adjoint values exact".into())
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let chain4 = PosetProfile::new(&Poset::chain(4)).unwrap();
    let sp = |n| chain4.sp(n).unwrap().lo;
    check(sp(17) == big(1716), "Sp(C4,17)", &mut failures);
    check(sp(18) == big(3432), "Sp(C4,18)", &mut failures);
    for (n, m) in [(2024, "2.137"), (2025, "4.272"), (2026, "8.544")] {
        let v = sp(n);
        check(within_sig_unit(&v, m, 606, 4), format!("Sp(C4,{n}) = {}", scientific(&v, 7)), &mut failures);
        check(v == fsb(n as i64 - 4), format!("Sp(C4,{n}) differs from fsb"), &mut failures);
    }
    verdict(failures, "1716, 3432 exact; 2.137e606, 4.272e606, 8.544e606 within one unit of the 4th digit".into())
}

fn criterion_4() -> Outcome {
    let lo_exp = [1u64, 1, 2, 4, 7, 13, 24, 46, 86, 166, 314, 610, 1163, 2269];
    let up_exp = [1u64, 1, 2, 4, 7, 14, 25, 48, 90, 173, 326, 632, 1201, 2340];
    let mut failures = Vec::new();
    for n in 2..=15u64 {
        let i = n as usize - 2;
        check(lo_s_v(n) == big(lo_exp[i]), format!("loS(V,{n})"), &mut failures);
        check(up_s_v(n) == big(up_exp[i]), format!("upS(V,{n})"), &mut failures);
    }
    check(ratio(&up_s_v(14), &lo_s_v(14), 3).as_deref() == Some("1.033"), "ratio n=14", &mut failures);
    check(ratio(&up_s_v(15), &lo_s_v(15), 3).as_deref() == Some("1.031"), "ratio n=15", &mut failures);
    for (n, lo_m, up_m, r) in
        [(2022, "2.848220", "2.848846", "1.000219853"), (2023, "5.695500", "5.696752", "1.000219780")]
    {
        let (lo, up) = (lo_s_v(n), up_s_v(n));
        check(within_sig_unit(&lo, lo_m, 606, 6), format!("loS(V,{n}) = {}", scientific(&lo, 7)), &mut failures);
        check(within_sig_unit(&up, up_m, 606, 6), format!("upS(V,{n}) = {}", scientific(&up, 7)), &mut failures);
        let got = ratio(&up, &lo, 9);
        check(got.as_deref() == Some(r), format!("ratio n={n}: {got:?}"), &mut failures);
    }
    verdict(failures, "28/28 small values exact; large-n values and 9-place ratios match".into())
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let rows = [
        (2022, "2.136194", "2.136987", "1.000371103"),
        (2023, "4.271332", "4.272916", "1.000370920"),
        (2024, "8.540554", "8.543720", "1.000370737"),
    ];
    for (n, lo_m, up_m, r) in rows {
        let (lo, up) = (lo_s_w(n), up_s_w(n));
        check(within_sig_unit(&lo, lo_m, 606, 6), format!("loS(W,{n}) = {}", scientific(&lo, 7)), &mut failures);
        check(within_sig_unit(&up, up_m, 606, 6), format!("upS(W,{n}) = {}", scientific(&up, 7)), &mut failures);
        let got = ratio(&up, &lo, 9);
        check(got.as_deref() == Some(r), format!("ratio n={n}: {got:?}"), &mut failures);
    }
    verdict(failures, "6 values within one unit of the 6th digit; 3 ratios exact to 9 places".into())
}

fn criterion_6() -> Outcome {
    let ks: Vec<BigUint> = ["2022", "2023", "3e606", "5e606"].iter().map(|s| parse_bignat(s).unwrap()).collect();
    let lattices = [
        ("5-element chain", DistLattice::chain(5).unwrap(), [18u64, 18, 2025, 2026]),
        ("Dn(V)", down_set_lattice(&Poset::v(), 100).unwrap(), [15, 15, 2023, 2023]),
        ("Dn(W)", down_set_lattice(&Poset::w(), 100).unwrap(), [16, 16, 2023, 2024]),
    ];
    let mut failures = Vec::new();
    let mut chain_row = Vec::new();
    let mut matched = 0;
    for (name, d, expected) in &lattices {
        for (k, &want) in ks.iter().zip(expected) {
            let r = gmin_power(d, k).unwrap();
            check(r.kind == Kind::Exact, format!("{name} k={k}: not exact"), &mut failures);
            if r.lo == want {
                matched += 1;
            } else if *name == "5-element chain" {
                chain_row.push(r.lo);
            } else {
                failures.push(format!("{name} k={k}: got {}, expected {want}", r.lo));
            }
        }
    }
    // Jir of the 5-element chain is the 4-element chain C_3 (p = 3), giving
    // 3 + afsb(k). The printed row is 4 + afsb(k), i.e. Jir taken as C_4.
    let theorem_row: Vec<u64> = ks.iter().map(|k| 3 + afsb(k).unwrap()).collect();
    check(chain_row == theorem_row, format!("chain row {chain_row:?} is not 3 + afsb(k)"), &mut failures);
    // The printed row is what the 6-element chain (Jir = C_4) gives.
    let chain6 = DistLattice::chain(6).unwrap();
    let six: Vec<u64> = ks.iter().map(|k| gmin_power(&chain6, k).unwrap().lo).collect();
    check(six == [18, 18, 2025, 2026], format!("6-element chain row {six:?}"), &mut failures);
    // Brute force on small chain powers confirms the Jir reading:
    // gmin(C_m^2) = (m - 2) + afsb(2) = m for the m-element chain.
    for m in 2..=5 {
        let d = DistLattice::chain(m).unwrap();
        let p = direct_power(&d, 2, 100).unwrap();
        let (s, _) = gmin_bruteforce(p.lattice(), DEFAULT_BRUTE_CAP).unwrap();
        let formula = gmin_power(&d, &big(2)).unwrap().lo;
        check(s as u64 == formula, format!("{m}-chain squared: brute {s}, formula {formula}"), &mut failures);
    }
    if !failures.is_empty() {
        return Outcome::Broken(failures.join("; "));
    }
    Outcome::KnownFail(format!(
        "{matched}/12 entries reproduced, all exact; 5-element chain row gives {theorem_row:?} instead of \
         [18, 18, 2025, 2026]: Jir(5-chain) is the 4-element chain, and brute force on m-chain squared \
         (m = 2..5) agrees with the Jir reading; the printed row is the 6-element chain's"
    ))
}

fn criterion_7(slow: bool) -> Outcome {
    let mut failures = Vec::new();
    let cfg = OracleConfig::default();
    let start = Instant::now();
    for (n, want) in [(3, 1), (4, 1), (5, 2)] {
        let r = sp_exhaustive(&Poset::w(), n, cfg).unwrap();
        check(r.exact && r.value == want, format!("Sp(W,{n}) = {}", r.value), &mut failures);
        check(certify(&r.witness).passed(), format!("W n={n} witness"), &mut failures);
    }
    check(start.elapsed() < Duration::from_secs(60), "W n<=5 over 60 s", &mut failures);
    for (n, want) in [(2, 1), (3, 1), (4, 2), (5, 4)] {
        let r = sp_exhaustive(&Poset::v(), n, cfg).unwrap();
        check(r.exact && r.value == want, format!("Sp(V,{n}) = {}", r.value), &mut failures);
    }
    for t in 0..=3 {
        for n in 0..=5 {
            let r = sp_exhaustive(&Poset::chain(t), n, cfg).unwrap();
            let want = fsb(n as i64 - t as i64);
            check(big(r.value as u64) == want, format!("Sp(C{t},{n}) = {}", r.value), &mut failures);
        }
    }
    let mut detail = String::from("W 1,1,2; V 1,1,2,4; chains t<=3, n<=5 match fsb(n-t)");
    if slow {
        let cfg6 = OracleConfig { time_budget: Some(Duration::from_secs(600)), ..cfg.with_n6() };
        let t = Instant::now();
        let r = sp_exhaustive(&Poset::w(), 6, cfg6).unwrap();
        check(r.exact && r.value == 6, format!("Sp(W,6) = {} (exact: {})", r.value, r.exact), &mut failures);
        detail.push_str(&format!("; opt-in W n=6 -> {} in {:.1?}", r.value, t.elapsed()));
    } else {
        detail.push_str("; opt-in W n=6 skipped");
    }
    verdict(failures, detail)
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    for n in 3..=14 {
        let f = witness_w(n).unwrap();
        check(big(f.len() as u64) == lo_s_w(n as u64), format!("|W family| n={n}"), &mut failures);
        check(certify(&f).passed(), format!("W family n={n}"), &mut failures);
    }
    for n in 2..=15 {
        let f = witness_v(n).unwrap();
        check(big(f.len() as u64) == lo_s_v(n as u64), format!("|V family| n={n}"), &mut failures);
        check(certify(&f).passed(), format!("V family n={n}"), &mut failures);
    }
    let bounded: Vec<Poset> = (0..=4).map(Poset::chain).chain([Poset::powerset(2).unwrap()]).collect();
    for u in &bounded {
        let prof = PosetProfile::new(u).unwrap();
        for n in prof.dimension..=12 {
            let f = witness_bounded(&prof, n).unwrap();
            let want = fsb(n as i64 - prof.dimension as i64);
            check(big(f.len() as u64) == want, format!("bounded family size n={n}"), &mut failures);
            check(certify(&f).passed(), format!("bounded family n={n}"), &mut failures);
        }
    }
    verdict(failures, "W n=3..14, V n=2..15, chains t<=4 and Pow([2]) n<=12 certified with exact sizes".into())
}

fn criterion_9(slow: bool) -> Outcome {
    let mut failures = Vec::new();
    let dnv = down_set_lattice(&Poset::v(), 100).unwrap();
    let cases: Vec<(&str, DistLattice, usize, Option<usize>)> = vec![
        ("2-chain^2", DistLattice::chain(2).unwrap(), 2, None),
        ("2-chain^3", DistLattice::chain(2).unwrap(), 3, Some(3)),
        ("3-chain^2", DistLattice::chain(3).unwrap(), 2, None),
        ("Dn(V)^2", dnv, 2, Some(4)),
    ];
    let mut parts = Vec::new();
    let mut run = |name: &str, d: &DistLattice, k: usize, want: Option<usize>, limit: Duration| {
        let t = Instant::now();
        let formula = gmin_power(d, &big(k as u64)).unwrap();
        let p = direct_power(d, k, 4096).unwrap();
        let (s, _) = gmin_bruteforce(p.lattice(), DEFAULT_BRUTE_CAP).unwrap();
        let took = t.elapsed();
        check(
            formula.kind == Kind::Exact && formula.lo == s as u64,
            format!("{name}: brute {s}, formula {formula}"),
            &mut failures,
        );
        if let Some(w) = want {
            check(s == w, format!("{name}: {s} != {w}"), &mut failures);
        }
        check(took < limit, format!("{name} took {took:?}"), &mut failures);
        parts.push(format!("{name}={s}"));
    };
    for (name, d, k, want) in &cases {
        run(name, d, *k, *want, Duration::from_secs(30));
    }
    if slow {
        let dnw = down_set_lattice(&Poset::w(), 100).unwrap();
        let formula = gmin_power(&dnw, &big(2)).unwrap();
        // Asp(W,2) is bracketed 4..5 by the estimators; the exact value is 5.
        let p = direct_power(&dnw, 2, 4096).unwrap();
        let t = Instant::now();
        let (s, _) = gmin_bruteforce(p.lattice(), DEFAULT_BRUTE_CAP).unwrap();
        check(
            s == 5 && formula.lo <= 5 && 5 <= formula.hi,
            format!("Dn(W)^2: brute {s}, formula {formula}"),
            &mut failures,
        );
        parts.push(format!("Dn(W)^2={s} ({:.1?}, formula {formula})", t.elapsed()));
    } else {
        parts.push("Dn(W)^2 skipped".into());
    }
    verdict(failures, parts.join(", "))
}

fn criterion_10() -> Outcome {
    let mut failures = Vec::new();
    // Galois laws: f*(k) <= n  iff  k <= f(n).
    let fns: Vec<Box<dyn MonotoneFn>> = vec![
        Box::new(Fsb),
        Box::new(Pattern::W.lower_fn()),
        Box::new(Pattern::W.upper_fn()),
        Box::new(Pattern::V.lower_fn()),
        Box::new(Pattern::V.upper_fn()),
        Box::new(NamedFn::new("binom(n,2)", |n| binom(n as i64, 2))),
    ];
    for f in &fns {
        let vals: Vec<BigUint> = (0..=40).map(|n| f.eval(n)).collect();
        for k in 1..=2000u64 {
            let kb = big(k);
            let a = left_adjoint(f.as_ref(), &kb, DEFAULT_ADJOINT_EVALS).unwrap();
            for (n, v) in vals.iter().enumerate() {
                if (a <= n as u64) != (kb <= *v) {
                    failures.push(format!("{} Galois law at k={k}, n={n}", f.name()));
                }
            }
        }
    }
    for n in 3..=200 {
        check(up_s_w(n) <= lo_s_w(n + 1), format!("upS(W,{n}) > loS(W,{})", n + 1), &mut failures);
    }
    for k in 1..=10_000u64 {
        for pat in [Pattern::W, Pattern::V] {
            let (lo, hi) = asp_bracket(pat, &big(k)).unwrap();
            check(hi >= lo && hi - lo <= 1, format!("{} bracket width at k={k}", pat.name()), &mut failures);
        }
    }
    for n in 0..=6usize {
        for bits in 0u128..1 << n {
            let x = Subset(bits);
            let e = gamma_enumerate(x, n, GammaReading::Subset).unwrap();
            check(big(e) == gamma_count(x, n), format!("Gamma({x}) n={n}"), &mut failures);
        }
    }
    for n in 3..=40 {
        check(g0_argmin_check(n).unwrap().holds, format!("g0 argmin n={n}"), &mut failures);
    }
    for (name, u) in common::test_posets() {
        let d = down_set_lattice(&u, 4096).unwrap();
        let (j, _) = join_irreducibles(d.lattice());
        check(are_isomorphic(&j, &u), format!("Birkhoff round trip for {name}"), &mut failures);
    }
    check(!fsb(0).is_zero(), "fsb(0)", &mut failures);
    verdict(
        failures,
        "Galois laws, shift inequality n<=200, bracket width k<=10^4, Gamma n<=6, g0 n<=40, Birkhoff".into(),
    )
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    // Listing support so `cargo test -- --list` behaves.
    if args.iter().any(|a| a == "--list") {
        return;
    }
    let slow = args.iter().any(|a| a == "--ignored" || a == "--include-ignored")
        || std::env::var("SPERNER_SLOW").is_ok_and(|v| v == "1");
    type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        ("1 W estimator table (n=3..30)", Box::new(criterion_1)),
        ("2 adjoint table (k=1..15)", Box::new(criterion_2)),
        ("3 chain table", Box::new(criterion_3)),
        ("4 V tables", Box::new(criterion_4)),
        ("5 W big-n table", Box::new(criterion_5)),
        ("6 gmin table", Box::new(criterion_6)),
        ("7 exhaustive oracle", Box::new(move || criterion_7(slow))),
        ("8 witness certification", Box::new(criterion_8)),
        ("9 power formula vs brute force", Box::new(move || criterion_9(slow))),
        ("10 property suites", Box::new(criterion_10)),
    ];
    let mut broken = 0;
    let mut known = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let outcome = f();
        let took = t.elapsed();
        match outcome {
            Outcome::Pass(d) => println!("[PASS] criterion {name} ({took:.2?}): {d}"),
            Outcome::KnownFail(d) => {
                known += 1;
                println!("[FAIL] criterion {name} ({took:.2?}): {d}");
            }
            Outcome::Broken(d) => {
                broken += 1;
                println!("[FAIL] criterion {name} ({took:.2?}): UNEXPECTED: {d}");
            }
        }
    }
    println!(
        "acceptance: {} pass, {known} fail against the published values (analysed), {broken} unexpected",
        10 - known - broken
    );
    if broken > 0 {
        std::process::exit(1);
    }
}
