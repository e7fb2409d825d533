//! TOML category files.
//!
//! A category file has a `[category]` table (`name`, `simples`, `unit`, `dual`,
//! `fusion`), an `[F]` table keyed by `"a,b,c,d,e,f"`, an optional `[R]` table keyed
//! by `"a,b,c"` and an optional `[cupcap]` table mapping a simple to `[u, v]`.
//! A metric-group file has a `[group]` table (`name`, `orders`, optional `labels`),
//! a `[bicharacter]` table keyed by generator pairs `"i,j"` and an optional `[qform]`
//! table keyed by element labels. Scalars are `"p/q"` (the root of unity
//! `exp(2 pi i p/q)`) or `{ conductor = N, coeffs = ["a/b", ...] }`.
//! Central functor files are described at [`parse_functor`].

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use toml::{Table, Value};

use crate::basecat::{BlockMorphism, FusionData, FusionTables};
use crate::canonical::CentralFunctor;
use crate::error::{Error, Result};
use crate::metricgroup::{pointed_fusion_data_labeled, Bichar, FinAbGroup, QuadForm};
use crate::scalar::{CycScalar, Phase};

/// A pointed base given by a metric group.
#[derive(Clone, Debug)]
pub struct MetricBase {
    pub data: FusionData,
    pub bichar: Bichar,
    pub qform: QuadForm,
}

#[derive(Clone, Debug)]
pub enum BaseFile {
    Category(FusionData),
    Metric(MetricBase),
}

impl BaseFile {
    pub fn data(&self) -> &FusionData {
        match self {
            BaseFile::Category(c) => c,
            BaseFile::Metric(m) => &m.data,
        }
    }

    pub fn into_data(self) -> FusionData {
        match self {
            BaseFile::Category(c) => c,
            BaseFile::Metric(m) => m.data,
        }
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn table<'a>(t: &'a Table, key: &str) -> Result<&'a Table> {
    t.get(key)
        .ok_or_else(|| schema(format!("missing [{key}] table")))?
        .as_table()
        .ok_or_else(|| schema(format!("[{key}] must be a table")))
}

fn string<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(format!("{what} must be a string")))
}

fn str_list(v: &Value, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| schema(format!("{what} must be an array")))?
        .iter()
        .map(|x| string(x, what).map(String::from))
        .collect()
}

pub fn parse_scalar(v: &Value, what: &str) -> Result<CycScalar> {
    v.clone()
        .try_into::<CycScalar>()
        .map_err(|e| Error::Parse(format!("{what}: {}", e.message())))
}

pub fn scalar_value(s: &CycScalar) -> Value {
    Value::try_from(s).expect("scalars serialize")
}

fn parse_text(text: &str) -> Result<Table> {
    text.parse::<Table>().map_err(|e| Error::Parse(e.to_string()))
}

/// Parses either kind of base file.
pub fn parse_base(text: &str) -> Result<BaseFile> {
    let t = parse_text(text)?;
    if t.contains_key("group") {
        parse_metric_table(&t).map(BaseFile::Metric)
    } else {
        parse_category_table(&t).map(BaseFile::Category)
    }
}

pub fn load_base(path: &Path) -> Result<BaseFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_base(&text).map_err(|e| with_path(e, path))
}

pub fn with_path(e: Error, path: &Path) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        Error::Schema(m) => Error::Schema(format!("{}: {m}", path.display())),
        other => other,
    }
}

pub fn parse_category(text: &str) -> Result<FusionData> {
    parse_category_table(&parse_text(text)?)
}

fn parse_category_table(t: &Table) -> Result<FusionData> {
    let cat = table(t, "category")?;
    let get = |k: &str| cat.get(k).ok_or_else(|| schema(format!("[category] lacks `{k}`")));
    let name = string(get("name")?, "name")?.to_string();
    let labels = str_list(get("simples")?, "simples")?;
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let idx = |l: &str| -> Result<usize> {
        index.get(l).copied().ok_or_else(|| schema(format!("unknown simple label {l:?}")))
    };
    let unit = idx(string(get("unit")?, "unit")?)?;
    let dual_t = get("dual")?.as_table().ok_or_else(|| schema("`dual` must be a table"))?;
    let mut dual = vec![usize::MAX; labels.len()];
    for (k, v) in dual_t {
        dual[idx(k)?] = idx(string(v, "dual")?)?;
    }
    if let Some(a) = dual.iter().position(|&d| d == usize::MAX) {
        return Err(schema(format!("`dual` lacks simple {:?}", labels[a])));
    }
    let mut fusion = Vec::new();
    for triple in get("fusion")?.as_array().ok_or_else(|| schema("`fusion` must be an array"))? {
        let tr = str_list(triple, "fusion triple")?;
        if tr.len() != 3 {
            return Err(schema("fusion entries are [a, b, c] triples"));
        }
        fusion.push((idx(&tr[0])?, idx(&tr[1])?, idx(&tr[2])?));
    }
    let keyed = |tab: &Table, len: usize, what: &str| -> Result<Vec<(Vec<usize>, CycScalar)>> {
        let mut out = Vec::new();
        for (k, v) in tab {
            let parts: Vec<&str> = k.split(',').map(str::trim).collect();
            if parts.len() != len {
                return Err(schema(format!("{what} key {k:?} needs {len} labels")));
            }
            let key = parts.iter().map(|p| idx(p)).collect::<Result<Vec<_>>>()?;
            out.push((key, parse_scalar(v, &format!("{what}[{k}]"))?));
        }
        Ok(out)
    };
    let mut fsym = HashMap::new();
    if let Some(f) = t.get("F") {
        let f = f.as_table().ok_or_else(|| schema("[F] must be a table"))?;
        for (k, v) in keyed(f, 6, "F")? {
            fsym.insert([k[0], k[1], k[2], k[3], k[4], k[5]], v);
        }
    }
    let rsym = match t.get("R") {
        Some(r) => {
            let r = r.as_table().ok_or_else(|| schema("[R] must be a table"))?;
            Some(
                keyed(r, 3, "R")?
                    .into_iter()
                    .map(|(k, v)| ([k[0], k[1], k[2]], v))
                    .collect(),
            )
        }
        None => None,
    };
    let cupcap = match t.get("cupcap") {
        Some(cc) => {
            let cc = cc.as_table().ok_or_else(|| schema("[cupcap] must be a table"))?;
            let mut out = vec![None; labels.len()];
            for (k, v) in cc {
                let pair = v
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| schema(format!("cupcap[{k}] must be [u, v]")))?;
                out[idx(k)?] = Some((
                    parse_scalar(&pair[0], &format!("cupcap[{k}]"))?,
                    parse_scalar(&pair[1], &format!("cupcap[{k}]"))?,
                ));
            }
            Some(
                out.into_iter()
                    .enumerate()
                    .map(|(a, x)| x.ok_or_else(|| schema(format!("cupcap lacks simple {:?}", labels[a]))))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        None => None,
    };
    FusionData::new(FusionTables {
        name,
        labels,
        unit,
        dual,
        fusion,
        fsym,
        rsym,
        cupcap,
    })
}

fn quoted(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

/// Serializes a category; parsing the output gives back equal data.
pub fn category_to_toml(c: &FusionData) -> String {
    let t = c.to_tables();
    let lab = |i: usize| quoted(c.label(i));
    let list = |items: Vec<String>| format!("[{}]", items.join(", "));
    let key = |k: &[usize]| quoted(&k.iter().map(|&i| c.label(i)).collect::<Vec<_>>().join(","));
    let mut out = String::from("[category]\n");
    out += &format!("name = {}\n", quoted(c.name()));
    out += &format!("simples = {}\n", list((0..c.n()).map(lab).collect()));
    out += &format!("unit = {}\n", lab(t.unit));
    out += &format!(
        "dual = {{ {} }}\n",
        (0..c.n())
            .map(|a| format!("{} = {}", lab(a), lab(t.dual[a])))
            .collect::<Vec<_>>()
            .join(", ")
    );
    out += &format!(
        "fusion = {}\n",
        list(t.fusion.iter().map(|&(a, b, s)| list(vec![lab(a), lab(b), lab(s)])).collect())
    );
    out += "\n[F]\n";
    for k in c.stored_f_keys() {
        out += &format!("{} = {}\n", key(k), scalar_value(&t.fsym[k]));
    }
    if let Some(r) = &t.rsym {
        out += "\n[R]\n";
        for k in c.r_keys() {
            out += &format!("{} = {}\n", key(&k), scalar_value(&r[&k]));
        }
    }
    if let Some(cc) = &t.cupcap {
        out += "\n[cupcap]\n";
        for (a, (u, v)) in cc.iter().enumerate() {
            out += &format!("{} = [{}, {}]\n", lab(a), scalar_value(u), scalar_value(v));
        }
    }
    out
}

pub fn parse_metric_group(text: &str) -> Result<MetricBase> {
    parse_metric_table(&parse_text(text)?)
}

fn parse_metric_table(t: &Table) -> Result<MetricBase> {
    let g = table(t, "group")?;
    let name = g.get("name").map(|v| string(v, "name")).transpose()?.unwrap_or("pointed");
    let orders = g
        .get("orders")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("[group] needs an `orders` array"))?
        .iter()
        .map(|v| v.as_integer().ok_or_else(|| schema("orders must be integers")))
        .collect::<Result<Vec<i64>>>()?;
    let group = FinAbGroup::new(orders).map_err(|e| schema(e.to_string()))?;
    let labels = match g.get("labels") {
        Some(v) => str_list(v, "labels")?,
        None => group.elements().iter().map(|a| group.label(a)).collect(),
    };
    if labels.len() != group.size() {
        return Err(schema("`labels` must name every group element"));
    }
    let k = group.rank();
    let mut gens = vec![vec![Phase::zero(); k]; k];
    if let Some(b) = t.get("bicharacter") {
        let b = b.as_table().ok_or_else(|| schema("[bicharacter] must be a table"))?;
        for (key, v) in b {
            let ij: Vec<usize> = key
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| schema(format!("bicharacter key {key:?} must be \"i,j\"")))?;
            if ij.len() != 2 || ij[0] >= k || ij[1] >= k {
                return Err(schema(format!("bicharacter key {key:?} out of range")));
            }
            gens[ij[0]][ij[1]] = string(v, "bicharacter value")?.parse::<Phase>()?;
        }
    }
    let bichar = Bichar::from_generators(group.clone(), gens)?;
    let qform = match t.get("qform") {
        Some(q) => {
            let q = q.as_table().ok_or_else(|| schema("[qform] must be a table"))?;
            let mut vals = vec![None; group.size()];
            for (l, v) in q {
                let i = labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| schema(format!("unknown element label {l:?}")))?;
                vals[i] = Some(string(v, "qform value")?.parse::<Phase>()?);
            }
            let vals = vals
                .into_iter()
                .enumerate()
                .map(|(i, v)| v.ok_or_else(|| schema(format!("qform lacks element {:?}", labels[i]))))
                .collect::<Result<Vec<_>>>()?;
            QuadForm::new(group.clone(), vals)?
        }
        None => bichar.quadratic_form(),
    };
    let data = pointed_fusion_data_labeled(name, &bichar, labels)?;
    Ok(MetricBase { data, bichar, qform })
}

/// Parses a central functor file into the target category `target`.
///
/// The `[functor]` table has a `kind`: `"canonical"`, `"mueger-inclusion"`, `"trivial"`,
/// `"inclusion"` (with `simples`, the target labels of a full braided subcategory) or
/// `"explicit"`. An explicit functor needs the source category `source`, an `on_objects`
/// table from source to target labels and a `[half_braiding]` table: for each source simple
/// `w` and target simple `z`, the scalars of `b_{phi(w), z}` on the channels of
/// `phi(w) z` in increasing label order. Components at the unit may be omitted.
pub fn parse_functor(text: &str, source: Option<Arc<FusionData>>, target: Arc<FusionData>) -> Result<CentralFunctor> {
    let t = parse_text(text)?;
    let f = table(&t, "functor")?;
    let kind = string(f.get("kind").ok_or_else(|| schema("[functor] lacks `kind`"))?, "kind")?;
    match kind {
        "canonical" => CentralFunctor::canonical(target),
        "mueger-inclusion" => CentralFunctor::mueger_inclusion(target),
        "trivial" => CentralFunctor::from_trivial(target),
        "inclusion" => {
            let labels = str_list(f.get("simples").ok_or_else(|| schema("inclusion needs `simples`"))?, "simples")?;
            let idx = labels
                .iter()
                .map(|l| target.index_of(l).map_err(|e| schema(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            CentralFunctor::inclusion(target, &idx, None)
        }
        "explicit" => {
            let b = source.ok_or_else(|| schema("an explicit functor needs its source category"))?;
            let c = &*target;
            let lbl = |cat: &FusionData, l: &str| cat.index_of(l).map_err(|e| schema(e.to_string()));
            let on = table(f, "on_objects")?;
            let mut phi = vec![usize::MAX; b.n()];
            for (k, v) in on {
                phi[lbl(&b, k)?] = lbl(c, string(v, "on_objects value")?)?;
            }
            if let Some(w) = phi.iter().position(|&a| a == usize::MAX) {
                return Err(schema(format!("on_objects lacks {:?}", b.label(w))));
            }
            let hb = table(&t, "half_braiding")?;
            let mut half = Vec::with_capacity(b.n());
            for w in 0..b.n() {
                let row = hb.get(b.label(w)).and_then(Value::as_table);
                let x = c.simple_object(phi[w]);
                let mut comps = Vec::with_capacity(c.n());
                for z in 0..c.n() {
                    let zm = c.simple_object(z);
                    let (src, tgt) = (c.tensor(&x, &zm), c.tensor(&zm, &x));
                    let entry = row.and_then(|r| r.get(c.label(z)));
                    let Some(v) = entry else {
                        if z == c.unit() {
                            comps.push(c.lunit_inv(&x).compose(&c.runit(&x)));
                            continue;
                        }
                        return Err(schema(format!(
                            "half_braiding lacks ({:?}, {:?})",
                            b.label(w),
                            c.label(z)
                        )));
                    };
                    let what = format!("half_braiding[{}][{}]", b.label(w), c.label(z));
                    let vals = v.as_array().ok_or_else(|| schema(format!("{what} must be an array")))?;
                    let chans = src.support();
                    if vals.len() != chans.len() || src != tgt {
                        return Err(schema(format!("{what} needs {} channel scalars", chans.len())));
                    }
                    let mut m = BlockMorphism::zero(&src, &tgt);
                    for (&s, v) in chans.iter().zip(vals) {
                        m.set_entry(s, 0, 0, parse_scalar(v, &what)?);
                    }
                    comps.push(m);
                }
                half.push(comps);
            }
            CentralFunctor::new(b, target, phi, half)
        }
        other => Err(schema(format!("unknown functor kind {other:?}"))),
    }
}

/// Writes `psi` as an explicit functor file.
pub fn functor_to_toml(psi: &CentralFunctor) -> String {
    let (b, c) = (psi.source(), psi.target());
    let mut out = String::from("[functor]\nkind = \"explicit\"\n\n[functor.on_objects]\n");
    for w in 0..b.n() {
        out += &format!("{} = {}\n", quoted(b.label(w)), quoted(c.label(psi.on_object(w))));
    }
    for w in 0..b.n() {
        out += &format!("\n[half_braiding.{}]\n", quoted(b.label(w)));
        for (z, m) in psi.half_braiding(w).iter().enumerate() {
            let vals: Vec<String> = m
                .source()
                .support()
                .into_iter()
                .map(|s| scalar_value(m.entry(s, 0, 0)).to_string())
                .collect();
            out += &format!("{} = [{}]\n", quoted(c.label(z)), vals.join(", "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn categories_round_trip_bit_exactly() {
        for c in fixtures::all() {
            let text = category_to_toml(&c);
            let back = parse_category(&text).unwrap();
            assert_eq!(back, c, "{}", c.name());
            assert_eq!(category_to_toml(&back), text);
        }
    }

    #[test]
    fn missing_f_symbol_names_the_tuple() {
        let text = category_to_toml(&fixtures::fibonacci());
        let cut: String = text
            .lines()
            .filter(|l| !l.starts_with("\"tau,tau,tau,tau,tau,tau\""))
            .map(|l| format!("{l}\n"))
            .collect();
        let err = parse_category(&cut).unwrap_err();
        assert!(matches!(err, Error::Schema(ref m) if m.contains("(tau,tau,tau,tau,tau,tau)")), "{err}");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_category("[category]\nname = \n").unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("line 2")), "{err}");
    }

    #[test]
    fn metric_group_file() {
        let m = parse_metric_group(
            "[group]\nname = \"z4\"\norders = [4]\n[bicharacter]\n\"0,0\" = \"1/4\"\n",
        )
        .unwrap();
        assert!(m.data.validate().is_valid());
        assert_eq!(m.qform.radical(), vec![vec![0], vec![2]]);
    }
}
