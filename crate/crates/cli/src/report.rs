//! Report data (serialized as JSON) and its plain-text rendering.

use std::fmt::Write as _;

use mlaw::{
    abelian_invariants, are_isomorphic_bounded, builtin_family, Family, FiniteGroup, StructureClass,
};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub spec: String,
    pub order: usize,
    pub abelian: bool,
    pub generators: Vec<GeneratorInfo>,
    pub derived_order: usize,
    pub abelianization: Vec<usize>,
    pub center_order: usize,
}

impl GroupReport {
    pub fn new(spec: &str, g: &FiniteGroup) -> Self {
        GroupReport {
            spec: spec.to_string(),
            order: g.order(),
            abelian: g.is_abelian(),
            generators: g
                .generators()
                .iter()
                .map(|&x| GeneratorInfo {
                    name: g.name(x).to_string(),
                    order: g.element_order(x),
                })
                .collect(),
            derived_order: g.derived_subgroup().order(),
            abelianization: abelian_invariants(g).divisors().to_vec(),
            center_order: g.center().order(),
        }
    }

    pub fn render(&self, out: &mut String) {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format!("{} (order {})", g.name, g.order))
            .collect();
        let _ = writeln!(out, "group: {}", self.spec);
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "generators: {}", if gens.is_empty() { "none".into() } else { gens.join(", ") });
        let _ = writeln!(out, "abelian: {}", self.abelian);
        let _ = writeln!(out, "derived subgroup order: {}", self.derived_order);
        let _ = writeln!(out, "abelianization: {}", invariants_text(&self.abelianization));
        let _ = writeln!(out, "center order: {}", self.center_order);
    }
}

pub fn invariants_text(d: &[usize]) -> String {
    if d.is_empty() {
        "1".into()
    } else {
        d.iter().map(|x| format!("Z_{x}")).collect::<Vec<_>>().join(" x ")
    }
}

/// Invariant factors for abelian groups, otherwise a catalog name.
#[derive(Clone, Debug, Serialize)]
pub struct GroupDescription {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupDescription {
    pub fn of(g: &FiniteGroup) -> Self {
        if g.is_abelian() {
            GroupDescription {
                order: g.order(),
                invariants: Some(abelian_invariants(g).divisors().to_vec()),
                name: None,
            }
        } else {
            GroupDescription {
                order: g.order(),
                invariants: None,
                name: Some(catalog_name(g)),
            }
        }
    }

    pub fn text(&self) -> String {
        match (&self.invariants, &self.name) {
            (Some(d), _) => invariants_text(d),
            (None, Some(name)) => name.clone(),
            (None, None) => format!("order {}", self.order),
        }
    }
}

fn catalog(order: usize) -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    let mut push = |name: String, family: Family, params: &[usize]| {
        if let Ok(g) = builtin_family(family, params) {
            out.push((name, g));
        }
    };
    if order.is_multiple_of(2) && order / 2 >= 3 {
        push(format!("D:{}", order / 2), Family::Dihedral, &[order / 2]);
    }
    if order.is_multiple_of(4) && order / 4 >= 2 {
        push(format!("Q:{}", order / 4), Family::Quaternion, &[order / 4]);
    }
    for (n, f) in [(3, 6), (4, 24), (5, 120)] {
        if f == order {
            push(format!("S:{n}"), Family::Symmetric, &[n]);
        }
    }
    for (n, f) in [(4, 12), (5, 60)] {
        if f == order {
            push(format!("A:{n}"), Family::Alternating, &[n]);
        }
    }
    if order == 24 {
        push("SL23".into(), Family::Sl23, &[]);
    }
    out
}

/// `"Q:2 (order 8)"` when a builtin family matches, otherwise the order and
/// the element-order profile.
pub fn catalog_name(g: &FiniteGroup) -> String {
    for (name, h) in catalog(g.order()) {
        if are_isomorphic_bounded(g, &h, g.order()).unwrap_or(false) {
            return format!("{name} (order {})", g.order());
        }
    }
    let mut orders = g.element_orders();
    orders.sort_unstable();
    let mut profile = Vec::new();
    let mut i = 0;
    while i < orders.len() {
        let j = orders[i..].iter().take_while(|&&o| o == orders[i]).count();
        profile.push(format!("{}^{}", orders[i], j));
        i += j;
    }
    format!("order {}, element orders {}", g.order(), profile.join(" "))
}

#[derive(Clone, Debug, Serialize)]
pub struct WedgeReport {
    pub kind: String,
    #[serde(flatten)]
    pub square: GroupDescription,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurReport {
    pub order: usize,
    pub invariants: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WedgeCommandReport {
    pub group: GroupReport,
    pub wedge: WedgeReport,
    pub schur_multiplier: Option<SchurReport>,
}

impl WedgeCommandReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: {} (order {})", self.group.spec, self.group.order);
        render_wedge(&mut out, &self.wedge, self.schur_multiplier.as_ref());
        out
    }
}

fn render_wedge(out: &mut String, w: &WedgeReport, m: Option<&SchurReport>) {
    let _ = writeln!(out, "{} square order: {}", w.kind, w.square.order);
    let _ = writeln!(out, "{} square: {}", w.kind, w.square.text());
    if let Some(m) = m {
        let _ = writeln!(out, "schur multiplier: {}", invariants_text(&m.invariants));
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub ideal_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_invariants: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_name: Option<String>,
    pub representative_count: usize,
    pub trivial: bool,
    pub commutator: bool,
}

impl ClassReport {
    pub fn new(c: &StructureClass) -> Self {
        let d = GroupDescription::of(&c.ideal_group);
        ClassReport {
            ideal_order: c.ideal_order,
            ideal_invariants: d.invariants,
            ideal_name: d.name,
            representative_count: c.representatives.len(),
            trivial: c.is_trivial_class,
            commutator: c.is_commutator_class,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuresReport {
    pub method: String,
    pub raw_count: usize,
    pub class_count: usize,
    pub classes: Vec<ClassReport>,
    pub lie_simple: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homomorphisms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejected_by_equivariance: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejected_by_jacobi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateReport {
    pub group: GroupReport,
    pub wedge: Option<WedgeReport>,
    pub schur_multiplier: Option<SchurReport>,
    pub structures: StructuresReport,
}

impl EnumerateReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: {} (order {})", self.group.spec, self.group.order);
        if let Some(w) = &self.wedge {
            render_wedge(&mut out, w, self.schur_multiplier.as_ref());
        }
        let s = &self.structures;
        let _ = writeln!(out, "method: {}", s.method);
        if let (Some(h), Some(e), Some(j)) = (s.homomorphisms, s.rejected_by_equivariance, s.rejected_by_jacobi) {
            let _ = writeln!(
                out,
                "homomorphisms from exterior square: {h} ({e} not equivariant, {j} failing Jacobi)"
            );
        }
        if let Some(agree) = s.methods_agree {
            let _ = writeln!(out, "enumerators agree: {agree}");
        }
        let _ = writeln!(out, "tables: {}", s.raw_count);
        let _ = writeln!(out, "classes: {}", s.class_count);
        for (i, c) in s.classes.iter().enumerate() {
            let ideal = match (&c.ideal_invariants, &c.ideal_name) {
                (Some(d), _) => invariants_text(d),
                (None, Some(n)) => n.clone(),
                (None, None) => format!("order {}", c.ideal_order),
            };
            let mut tags = Vec::new();
            if c.trivial {
                tags.push("trivial");
            }
            if c.commutator {
                tags.push("commutator");
            }
            let tags = if tags.is_empty() { String::new() } else { format!(" [{}]", tags.join(", ")) };
            let _ = writeln!(
                out,
                "  {}. ideal order {}: {ideal}, {} table{}{tags}",
                i + 1,
                c.ideal_order,
                c.representative_count,
                if c.representative_count == 1 { "" } else { "s" },
            );
        }
        let _ = writeln!(out, "lie simple: {}", s.lie_simple);
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomLine {
    pub axiom: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub group: String,
    pub order: usize,
    pub valid: bool,
    pub axioms: Vec<AxiomLine>,
}

impl VerifyReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: {} (order {})", self.group, self.order);
        for a in &self.axioms {
            let status = if a.holds { "ok" } else { "FAILED" };
            match &a.witness {
                Some(w) => {
                    let _ = writeln!(out, "axiom {}: {status} at ({})", a.axiom, w.join(", "));
                }
                None => {
                    let _ = writeln!(out, "axiom {}: {status}", a.axiom);
                }
            }
        }
        let _ = writeln!(out, "valid: {}", self.valid);
        out
    }
}
