use std::error::Error;
use std::fs;
use std::path::Path;

use resint::families::{e6_dataset, e7_dataset_with_i2, BigCell, LeftArmReading, PlueckerGr2, SkewMatrix};
use resint::groebner::{codim, intersect, is_member, min_generators, quotient};
use resint::schubert::{crystal_to_dot, gk_to_dot, Crystal, DynkinDiagram, DynkinType, GkGraph};
use resint::verify::{bundled_scenario, run_scenario, RunOptions, Scenario, Verdict};
use resint::{parse_poly, GbConfig, Ideal, MonomialOrder, Polynomial, Ring};
use serde_json::{json, Value};

use crate::{
    Cli, Command, FamilyArgs, FamilyName, GlobalOpts, GraphArgs, GraphKind, OpArgs, OpName, OrderArg,
    PlueckerIdeal, ReadingArg, VerifyArgs,
};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Verify(a) => verify(&cli.global, a),
        Command::Family(a) => family(&cli.global, a),
        Command::Op(a) => op(&cli.global, a),
        Command::Graph(a) => graph(&cli.global, a),
    }
}

fn order(g: &GlobalOpts) -> Option<MonomialOrder> {
    g.order.map(|o| match o {
        OrderArg::Grevlex => MonomialOrder::Grevlex,
        OrderArg::Lex => MonomialOrder::Lex,
    })
}

fn gb_config(g: &GlobalOpts) -> GbConfig {
    let mut cfg = GbConfig::default();
    if let Some(n) = g.max_reductions {
        cfg = cfg.with_max_reductions(n);
    }
    if let Some(bits) = g.max_coeff_bits {
        cfg = cfg.with_max_coeff_bits(bits);
    }
    let dir = std::env::var_os("RESINT_CACHE_DIR").filter(|d| !d.is_empty()).map(Into::into);
    cfg.with_cache_dir(dir)
}

fn write_json(g: &GlobalOpts, value: &Value) -> Result<()> {
    if let Some(path) = &g.json {
        let text = serde_json::to_string_pretty(value)? + "\n";
        fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

fn verify(g: &GlobalOpts, a: &VerifyArgs) -> Result<u8> {
    let text = match a.scenario.strip_prefix("bundled:") {
        Some(name) => bundled_scenario(name)
            .ok_or_else(|| format!("no bundled scenario `{name}`"))?
            .to_string(),
        None => fs::read_to_string(&a.scenario).map_err(|e| format!("cannot read {}: {e}", a.scenario))?,
    };
    let mut sc = Scenario::from_json(&text)?;
    for spec in &a.aliases {
        let (name, target) = spec
            .split_once('=')
            .ok_or_else(|| format!("alias `{spec}` is not NAME=TARGET"))?;
        sc.aliases.insert(name.trim().to_string(), target.trim().to_string());
    }
    let opts = RunOptions { gb: gb_config(g), jobs: g.jobs, order: order(g), exact: a.exact };
    let report = run_scenario(&sc, &opts)?;
    for c in &report.checks {
        let mut line = format!("{:<8}{:>8} ms  {}", c.verdict.as_str().to_uppercase(), c.millis, c.name);
        if let Some(e) = &c.error {
            line.push_str(&format!("  ({e})"));
        }
        println!("{line}");
    }
    let s = &report.summary;
    println!("summary: {} pass, {} fail, {} error, {} partial", s.pass, s.fail, s.error, s.partial);
    write_json(g, &serde_json::to_value(&report)?)?;
    let code = if report.checks.iter().any(|c| c.verdict == Verdict::Error) {
        2
    } else if report.all_pass() {
        0
    } else {
        1
    };
    Ok(code)
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    v.ok_or_else(|| format!("family {family} needs --{flag}").into())
}

fn family_generators(a: &FamilyArgs) -> Result<Vec<Polynomial>> {
    let label = format!("{:?}", a.name);
    let k = || need(a.k, "k", &label);
    let n = || need(a.n, "n", &label);
    let s = || need(a.s, "s", &label);
    let m = || need(a.m, "m", &label);
    let j = || need(a.j, "j", &label);
    let gens = match a.name {
        FamilyName::TypeALeft => {
            let reading = match a.reading {
                ReadingArg::Schubert => LeftArmReading::Schubert,
                ReadingArg::LastRows => LeftArmReading::LastRows,
            };
            BigCell::new(k()?, n()?)?.left_ideal(s()?, reading)?.generators().to_vec()
        }
        FamilyName::TypeARight => BigCell::new(k()?, n()?)?.right_ideal(s()?)?.generators().to_vec(),
        FamilyName::PfaffianSubmax => SkewMatrix::generic(m()?, "x")?.submaximal_pfaffians()?,
        FamilyName::PfaffianContaining => {
            SkewMatrix::generic(m()?, "x")?.pfaffian_ideal_containing(j()?)?.generators().to_vec()
        }
        FamilyName::KuBordered => SkewMatrix::generic(m()?, "x")?.bordered_pfaffians(j()?)?,
        FamilyName::Pluecker => {
            let g = PlueckerGr2::new(n()?)?;
            let ideal = match a.which {
                PlueckerIdeal::Relations => g.relation_ideal()?,
                PlueckerIdeal::I => g.i_ideal()?,
                PlueckerIdeal::K => g.k_ideal(j()?)?,
                PlueckerIdeal::Ij => g.i_j_ideal(j()?)?,
            };
            ideal.generators().to_vec()
        }
        FamilyName::E6 | FamilyName::E7 => {
            let name = a.ideal.as_deref().ok_or("datasets need --ideal NAME")?;
            let set = if a.name == FamilyName::E6 { e6_dataset() } else { e7_dataset_with_i2(&a.i2)? };
            set.ideal(name)?.generators().to_vec()
        }
    };
    Ok(gens)
}

fn reorder(gens: Vec<Polynomial>, order: Option<MonomialOrder>) -> Result<Vec<Polynomial>> {
    let Some(o) = order else { return Ok(gens) };
    let Some(first) = gens.first() else { return Ok(gens) };
    let ring = first.ring().with_order(o)?;
    Ok(gens.iter().map(|p| p.map_to_ring(&ring)).collect::<std::result::Result<_, _>>()?)
}

fn family(g: &GlobalOpts, a: &FamilyArgs) -> Result<u8> {
    let gens = reorder(family_generators(a)?, order(g))?;
    let lines: Vec<String> = gens.iter().map(ToString::to_string).collect();
    for l in &lines {
        println!("{l}");
    }
    write_json(g, &json!({ "family": format!("{:?}", a.name), "generators": lines }))?;
    Ok(0)
}

fn parse_all(items: &[String], ring: &Ring) -> Result<Vec<Polynomial>> {
    items
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_poly(s, ring).map_err(|e| format!("`{s}`: {e}").into()))
        .collect()
}

fn basis_lines(ideal: &Ideal, cfg: &GbConfig) -> Result<Vec<String>> {
    Ok(ideal.groebner_basis(cfg)?.elements().iter().map(ToString::to_string).collect())
}

fn op(g: &GlobalOpts, a: &OpArgs) -> Result<u8> {
    let cfg = gb_config(g);
    let ord = order(g).unwrap_or_default();
    let (ring, extra) = match a.pluecker {
        Some(n) => {
            let p = PlueckerGr2::new(n)?;
            let ring = p.ring().with_order(ord)?;
            let rel = p
                .relations()
                .iter()
                .map(|r| r.map_to_ring(&ring))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            (ring, rel)
        }
        None => {
            if a.ring.is_empty() {
                return Err("op needs --ring or --pluecker".into());
            }
            (Ring::new(&a.ring, ord)?, Vec::new())
        }
    };
    let with_extra = |mut v: Vec<Polynomial>| {
        v.extend(extra.iter().cloned());
        v
    };
    let ideal = Ideal::new(&ring, with_extra(parse_all(&a.gens, &ring)?))?;
    let second = || -> Result<Ideal> {
        if a.by.is_empty() {
            return Err("this operation needs --by".into());
        }
        Ok(Ideal::new(&ring, with_extra(parse_all(&a.by, &ring)?))?)
    };
    let result: Value = match a.op {
        OpName::Gb => json!(basis_lines(&ideal, &cfg)?),
        OpName::Quotient => json!(basis_lines(&quotient(&ideal, &second()?, &cfg)?, &cfg)?),
        OpName::Intersect => json!(basis_lines(&intersect(&ideal, &second()?, &cfg)?, &cfg)?),
        OpName::Member => {
            let text = a.poly.as_deref().ok_or("member needs --poly")?;
            let f = parse_poly(text, &ring).map_err(|e| format!("`{text}`: {e}"))?;
            json!(is_member(&f, &ideal, &cfg)?)
        }
        OpName::Codim => json!(codim(&ideal, &cfg)?),
        OpName::Mu => json!(min_generators(&ideal, &cfg)?.len()),
    };
    match &result {
        Value::Array(lines) => {
            for l in lines {
                println!("{}", l.as_str().unwrap_or_default());
            }
        }
        other => println!("{other}"),
    }
    write_json(g, &json!({ "op": format!("{:?}", a.op).to_lowercase(), "result": result }))?;
    Ok(0)
}

fn graph(g: &GlobalOpts, a: &GraphArgs) -> Result<u8> {
    let kind: DynkinType = a.dynkin_type.parse()?;
    let (dot, nodes, edges) = match a.kind {
        GraphKind::Gk => {
            let gk = GkGraph::build(&DynkinDiagram::new(kind, a.rank)?, a.k)?;
            (gk_to_dot(&gk), gk.nodes().len(), gk.edges().len())
        }
        GraphKind::Crystal => {
            DynkinDiagram::new(kind, a.rank)?;
            let c = match kind {
                DynkinType::A => Crystal::type_a(a.k, a.rank + 1)?,
                DynkinType::D if a.k == a.rank => Crystal::spin(a.rank)?,
                _ => return Err(format!("no crystal for node {} of {kind}{}", a.k, a.rank).into()),
            };
            (crystal_to_dot(&c), c.len(), c.edges().len())
        }
    };
    match &a.dot {
        Some(path) => write_text(path, &dot)?,
        None => print!("{dot}"),
    }
    write_json(g, &json!({ "nodes": nodes, "edges": edges, "dot": dot }))?;
    Ok(0)
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()).into())
}
