//! Browser bindings: three operations returning JSON strings, shared by the
//! static page in `www/` and by native tests.

use kr_crystals::cartan::AffineType;
use kr_crystals::crystal::Crystal;
use kr_crystals::energy::EnergyContext;
use kr_crystals::lusztig::{self, frak_k, rectangle_blocks};
use kr_crystals::partition::{Kind, Partition, RectangleList};
use kr_crystals::poly::LaurentPoly;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Vertex cap for crystals built in the browser.
const WEB_CAP: usize = 50_000;

fn ok(v: Value) -> String {
    v.to_string()
}

fn err(m: impl std::fmt::Display) -> String {
    json!({ "error": m.to_string() }).to_string()
}

fn poly(p: &LaurentPoly) -> Value {
    json!({ "text": p.to_string(), "terms": p.to_map().into_iter().map(|(k, c)| (k.to_string(), json!(c))).collect::<serde_json::Map<_, _>>() })
}

fn context(ty: &str, rank: usize) -> Result<EnergyContext, String> {
    Ok(EnergyContext::with_cap(AffineType::parse(ty, rank)?, WEB_CAP))
}

/// `B^{r,s}`: classical components, level, and the edges of every color
/// when the crystal is small enough to draw.
#[wasm_bindgen]
pub fn kr_crystal(ty: &str, rank: usize, r: usize, s: usize) -> String {
    let run = || -> Result<Value, String> {
        let ctx = context(ty, rank)?;
        let k = ctx.kr((r, s)).map_err(|e| e.to_string())?;
        let i0 = k.classical_colors();
        let (labels, _) = k.component_labels(&i0);
        let comps: Vec<Value> = k
            .highest_weight_vertices(&i0)
            .into_iter()
            .map(|b| json!({ "highest": k.label(b), "weight": k.weight(b), "size": labels.iter().filter(|&&l| l == labels[b]).count() }))
            .collect();
        let mut out = json!({ "type": ctx.aff.to_string(), "vertices": k.len(), "level": k.level(), "components": comps });
        if k.len() <= 200 {
            out["labels"] = json!((0..k.len()).map(|b| k.label(b)).collect::<Vec<_>>());
            out["edges"] = json!(k.edges());
        }
        Ok(out)
    };
    run().map_or_else(err, ok)
}

/// `X̄_{λ,B}(q)` for every λ, for `B` given as `"r1xs1,r2xs2"`.
#[wasm_bindgen]
pub fn one_dim_sums(ty: &str, rank: usize, tensors: &str) -> String {
    let run = || -> Result<Value, String> {
        let ctx = context(ty, rank)?;
        let rl: RectangleList = tensors.parse()?;
        let sums = ctx.one_dim_sums(&rl).map_err(|e| e.to_string())?;
        let rows: Vec<Value> = sums.iter().map(|(l, p)| json!({ "lambda": l.to_string(), "sum": poly(p) })).collect();
        Ok(json!({ "type": ctx.aff.to_string(), "tensors": rl.to_string(), "sums": rows }))
    };
    run().map_or_else(err, ok)
}

/// `𝔎_{λ}(q)` through the hat construction, next to the one-dimensional
/// sum it reproduces.
#[wasm_bindgen]
pub fn lusztig_side(ty: &str, rank: usize, tensors: &str, lambda: &str) -> String {
    let run = || -> Result<Value, String> {
        let ctx = context(ty, rank)?;
        let n = ctx.aff.n();
        let kind = ctx.aff.kind();
        let rl: RectangleList = tensors.parse()?;
        let lam: Partition = lambda.parse()?;
        if lam.len() > n {
            return Err(format!("λ has more than {} parts", n));
        }
        let blocks = rectangle_blocks(rl.rects(), n).map_err(|e| e.to_string())?;
        let k = frak_k(&blocks, &lam.to_weight(n), kind, lusztig::DEFAULT_RANK_CAP).map_err(|e| e.to_string())?;
        let x = ctx.one_dim_sum(&rl, &lam).map_err(|e| e.to_string())?;
        let shift = match kind {
            Kind::Empty => rl.norm() as i64,
            _ => 2 * (rl.norm() as i64 + rl.size() as i64 - lam.size() as i64) / kind.size() as i64,
        };
        let predicted = if k.is_zero() { k.clone() } else { k.subs_power(-1).shift(shift) };
        Ok(json!({
            "type": ctx.aff.to_string(),
            "lambda": lam.to_string(),
            "frak_k": poly(&k),
            "one_dim_sum": poly(&x),
            "predicted": poly(&predicted),
            "agree": predicted == x,
            "decreasing_widths": rl.has_decreasing_widths(),
        }))
    };
    run().map_or_else(err, ok)
}
