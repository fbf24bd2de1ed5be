use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::config::Config;
use crate::error::{Error, Result};
use crate::externalization as ext;
use crate::lr::{laws, Presentation};
use crate::magma::{self, Section};
use crate::mg::{checks as mg, SmcMode};
use crate::report::CheckReport;
use crate::workspace as ws;

pub struct Law {
    pub name: &'static str,
    pub about: &'static str,
    pub run: fn(&Config) -> CheckReport,
}

const G: Presentation = Presentation::Graphical;
const R: Presentation = Presentation::Recursive;

/// Internal-vertex bound for the tree laws, from `maxLeaves` when given.
fn deg(cfg: &Config, default: usize) -> usize {
    cfg.max_leaves.map_or(default, |n| n - 1)
}

pub static LAWS: &[Law] = &[
    Law { name: "enum-dims", about: "planar tree counts against m^k C_k, k <= 8", run: |c| magma::enum_dims_check(deg(c, 8) as u32) },
    Law { name: "ds-embeddings", about: "X_n coefficients are planar-embedding counts, n <= 8", run: |c| magma::ds_embedding_check(c.max_or(8)) },
    Law { name: "ds-display", about: "X_1..X_4 against the displayed solution", run: |_| magma::ds_display_check() },
    Law { name: "magma-morphism", about: "forget(M^nc(a,b)) = M(forget a, forget b)", run: |c| magma::morphism_check(c.max_or(5), &c.leaves()) },
    Law { name: "section-canonical-left", about: "canonical-left section is not a magma morphism", run: |c| magma::section_obstruction_check(Section::CanonicalLeft, c.max_or(3), &c.leaves()) },
    Law { name: "section-head-driven", about: "head-driven section is not a magma morphism", run: |c| magma::section_obstruction_check(Section::HeadDriven, c.max_or(3), &c.leaves()) },
    Law { name: "lr-assoc", about: "associativity of the leaf-path product", run: |c| laws::associativity(G, deg(c, 4)) },
    Law { name: "lr-assoc-recursive", about: "associativity of the recursive product", run: |c| laws::associativity(R, deg(c, 4)) },
    Law { name: "lr-coassoc", about: "coassociativity of the leaf-path coproduct", run: |c| laws::coassociativity(G, deg(c, 4)) },
    Law { name: "lr-coassoc-recursive", about: "coassociativity of the recursive coproduct", run: |c| laws::coassociativity(R, deg(c, 4)) },
    Law { name: "lr-counit", about: "counit, leaf-path coproduct", run: |c| laws::counit(G, deg(c, 4)) },
    Law { name: "lr-counit-recursive", about: "counit, recursive coproduct", run: |c| laws::counit(R, deg(c, 4)) },
    Law { name: "lr-bialgebra", about: "Δ is multiplicative, leaf-path pair", run: |c| laws::bialgebra(G, deg(c, 3)) },
    Law { name: "lr-bialgebra-recursive", about: "Δ is multiplicative, recursive pair", run: |c| laws::bialgebra(R, deg(c, 3)) },
    Law { name: "lr-antipode", about: "antipode identities, leaf-path pair", run: |c| laws::antipode_identities(G, deg(c, 3)) },
    Law { name: "lr-antipode-recursive", about: "antipode identities, recursive pair", run: |c| laws::antipode_identities(R, deg(c, 3)) },
    Law { name: "lr-grading", about: "degree is additive, leaf-path pair", run: |c| laws::grading(G, deg(c, 4)) },
    Law { name: "lr-grading-recursive", about: "degree is additive, recursive pair", run: |c| laws::grading(R, deg(c, 4)) },
    Law { name: "lr-rec-vs-graph", about: "recursive and leaf-path products agree", run: |c| laws::products_agree(deg(c, 4)) },
    Law { name: "lr-coproduct-recursive", about: "recursive and leaf-path coproducts agree", run: |c| laws::coproducts_agree(deg(c, 4)) },
    Law { name: "lr-graft-degree", about: "grafting adds one internal vertex", run: |c| laws::graft_degree(deg(c, 3)) },
    Law { name: "lr-graft-index", about: "grafting against the stated index k+l-1", run: |c| laws::graft_index_stated(deg(c, 3)) },
    Law { name: "em-head", about: "External Merge keeps the selector's head", run: |c| mg::em_head_check(&c.features(), c.max_or(4), c.matching_mode) },
    Law { name: "im-conservation", about: "Internal Merge keeps leaves and consumes one head feature", run: |c| mg::im_conservation_check(&c.features(), c.max_or(5)) },
    Law { name: "im-n-sequential", about: "I^n agrees with sequential Internal Merges", run: |c| mg::im_sequential_check(&c.features(), c.max_or(5)) },
    Law { name: "nested-domains", about: "Dom(I^{n+1}) ⊆ Dom(I^n)", run: |c| mg::nested_domains_check(&c.features(), c.max_or(5), 2) },
    Law { name: "coideal", about: "Δ_I(Dom I) ⊆ Dom I ⊗ H + H ⊗ Dom I", run: |c| mg::coideal_check(&c.features(), c.max_or(6), c.smc_mode) },
    Law { name: "right-ideal", about: "Dom I ⋆_I H ⊆ span Dom I", run: |c| mg::right_ideal_check(&c.features(), c.max_or(5) + 1, c.smc_mode) },
    Law { name: "left-ideal", about: "search for H ⋆_I Dom I escaping Dom I", run: |c| mg::left_ideal_check(&c.features(), c.max_or(5) + 1, c.smc_mode) },
    Law { name: "intmergeprod", about: "I(T ⋆_I T') against the decomposition sum", run: |c| mg::intmergeprod_check(&c.features(), c.max_or(5) + 1, c.smc_mode) },
    Law { name: "product-head", about: "h(T ⋆_I T') = h(T)", run: |c| mg::product_head_check(&c.features(), c.max_or(5) + 1, c.smc_mode) },
    Law { name: "coproduct-fallback", about: "Δ_I is Δ outside Dom I", run: |c| mg::coproduct_fallback_check(&c.features(), c.max_or(5), c.smc_mode) },
    Law { name: "product-fallback", about: "⋆_I is ⋆ outside Dom I", run: |c| mg::product_fallback_check(&c.features(), c.max_or(5) + 1, c.smc_mode) },
    Law { name: "coset", about: "reduction by Dom I is a right-module map", run: |c| mg::coset_check(&c.features(), c.max_or(5) + 1, 1, c.smc_mode) },
    Law { name: "cocycle", about: "cocycle identity on the External Merge domain", run: |c| mg::cocycle_check(&c.features(), c.max_or(4), R, Some(c.matching_mode)) },
    Law { name: "cocycle-unrestricted", about: "cocycle identity for every grafting", run: |c| mg::cocycle_check(&c.features(), c.max_or(4), R, None) },
    Law { name: "veeid", about: "∧-algebra identity on the External Merge domain", run: |c| mg::veeid_check(&c.features(), c.max_or(4), R, Some(c.matching_mode)) },
    Law { name: "veeid-unrestricted", about: "∧-algebra identity for every grafting", run: |c| mg::veeid_check(&c.features(), c.max_or(4), R, None) },
    Law { name: "ws-equivalence", about: "operational and algebraic Merge agree", run: |c| ws::equivalence_check(2, c.max_or(3), &c.leaves()) },
    Law { name: "minimal-search", about: "Minimal Search keeps exactly External and Internal Merge", run: |c| ws::minimal_search_check(2, c.max_or(3), &c.leaves()) },
    Law { name: "ws-conservation", about: "Merge terms keep the leaf count", run: |c| ws::conservation_check(2, c.max_or(3), &c.leaves()) },
    Law { name: "ws-coassoc", about: "coassociativity of the workspace coproduct", run: |c| ws::coassociativity_check(c.max_or(4), &c.leaves()) },
    Law { name: "ws-multiplicative", about: "Δ(F ⊔ F') = Δ(F) Δ(F')", run: |c| ws::bialgebra_check(2, c.max_or(2), &c.leaves()) },
    Law { name: "head-function-count", about: "2^|V°| head functions", run: |c| ext::head_function_count_check(c.max_or(6)) },
    Law { name: "lca-totality", about: "the headed LCA order is total", run: |c| ext::lca_totality_check(c.max_or(6)).0 },
    Law { name: "lca-totality-head-free", about: "the head-free LCA order is total", run: |c| ext::lca_totality_check(c.max_or(6)).1 },
    Law { name: "lca-antisymmetry", about: "the headed LCA order is antisymmetric", run: |c| ext::lca_antisymmetry_check(c.max_or(6)) },
    Law { name: "lca-partial-order", about: "the head-free LCA order is a strict partial order", run: |c| ext::lca_partial_order_check(c.max_or(6)) },
    Law { name: "planarize-section", about: "forget ∘ planarize = id", run: |c| ext::planarize_section_check(c.max_or(6)) },
    Law { name: "head-label-obstruction", about: "label-driven heads are undefined at every size", run: |c| ext::head_label_obstruction_check(&c.leaves(), c.max_or(5)) },
];

pub fn law(name: &str) -> Result<&'static Law> {
    LAWS.iter()
        .find(|l| l.name == name)
        .ok_or_else(|| Error::UnknownLaw(name.to_string()))
}

pub fn all_laws() -> Vec<&'static str> {
    LAWS.iter().map(|l| l.name).collect()
}

/// Runs the named laws in order. Unknown names fail before anything runs.
pub fn run_checks(names: &[&str], cfg: &Config, timing: bool) -> Result<Vec<CheckReport>> {
    cfg.validate()?;
    let laws = names.iter().map(|n| law(n)).collect::<Result<Vec<_>>>()?;
    Ok(laws
        .into_iter()
        .map(|l| {
            let start = Instant::now();
            let mut r = (l.run)(cfg);
            if timing {
                r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            r
        })
        .collect())
}

/// A documented disagreement between a law as stated and what the oracle finds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Discrepancy {
    pub law: String,
    /// Only expected under this SMC mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smc_mode: Option<SmcMode>,
    pub reason: String,
}

pub fn expected_discrepancies() -> Vec<Discrepancy> {
    serde_json::from_str(include_str!("expected_discrepancies.json")).expect("bundled discrepancy list is valid")
}

pub fn is_expected(report: &CheckReport, cfg: &Config) -> bool {
    expected_discrepancies()
        .iter()
        .any(|d| d.law == report.law && d.smc_mode.is_none_or(|m| m == cfg.smc_mode))
}

/// Reports with failures that no discrepancy entry covers.
pub fn unexpected_failures<'a>(reports: &'a [CheckReport], cfg: &Config) -> Vec<&'a CheckReport> {
    reports.iter().filter(|r| !r.ok() && !is_expected(r, cfg)).collect()
}

pub fn suite_json(reports: &[CheckReport], cfg: &Config) -> Value {
    let expected: Vec<Value> = reports
        .iter()
        .filter(|r| !r.ok() && is_expected(r, cfg))
        .map(|r| {
            let d = expected_discrepancies()
                .into_iter()
                .find(|d| d.law == r.law && d.smc_mode.is_none_or(|m| m == cfg.smc_mode))
                .unwrap();
            json!({"law": r.law, "failures": r.failures(), "reason": d.reason})
        })
        .collect();
    let unexpected: Vec<&str> = unexpected_failures(reports, cfg).iter().map(|r| r.law.as_str()).collect();
    json!({
        "schema": 1,
        "config": cfg,
        "reports": reports,
        "expected_discrepancies": expected,
        "unexpected_failures": unexpected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_match_reports() {
        let cfg = Config {
            max_leaves: Some(3),
            ..Config::default()
        };
        for l in LAWS {
            assert_eq!((l.run)(&cfg).law, l.name);
        }
    }

    #[test]
    fn unknown_law() {
        let cfg = Config::default();
        assert_eq!(
            run_checks(&["lr-assoc", "nope"], &cfg, false).unwrap_err(),
            Error::UnknownLaw("nope".into())
        );
    }

    #[test]
    fn discrepancy_list_names_known_laws() {
        for d in expected_discrepancies() {
            assert!(law(&d.law).is_ok(), "{}", d.law);
        }
    }
}
