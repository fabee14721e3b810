//! Tree-pair pictures of elements.
//!
//! Moved leaves are numbered so that leaf `i` of the domain tree is sent to
//! leaf `i` of the range tree; fixed leaves are left unlabelled.

use std::collections::BTreeMap;
use std::fmt::Write;

use thompson_core::text::format_word;
use thompson_core::{Element, Signature, Word};

/// Labels of the moved rules, in domain order.
fn labels(g: &Element) -> (BTreeMap<Word, usize>, BTreeMap<Word, usize>) {
    let mut dom = BTreeMap::new();
    let mut ran = BTreeMap::new();
    let mut next = 1;
    for (d, r) in g.rules() {
        if d != r {
            dom.insert(d.clone(), next);
            ran.insert(r.clone(), next);
            next += 1;
        }
    }
    (dom, ran)
}

fn draw_tree(sig: &Signature, out: &mut String, leaves: &BTreeMap<Word, Option<usize>>, node: &Word, prefix: &str) {
    let n = sig.alphabet();
    for a in 0..n {
        let child = node.child(0, a as u8);
        let last = a + 1 == n;
        let (branch, indent) = if last { ("└── ", "    ") } else { ("├── ", "│   ") };
        match leaves.get(&child) {
            Some(label) => {
                let tag = label.map(|i| format!("  [{i}]")).unwrap_or_default();
                let _ = writeln!(out, "{prefix}{branch}{}{tag}", format_word(sig, &child));
            }
            None => {
                let _ = writeln!(out, "{prefix}{branch}{}", format_word(sig, &child));
                draw_tree(sig, out, leaves, &child, &format!("{prefix}{indent}"));
            }
        }
    }
}

fn tree_text(sig: &Signature, words: &[Word], labels: &BTreeMap<Word, usize>) -> String {
    let leaves: BTreeMap<Word, Option<usize>> = words.iter().map(|w| (w.clone(), labels.get(w).copied())).collect();
    let root = sig.root();
    let mut out = String::new();
    if let Some(label) = leaves.get(&root) {
        let tag = label.map(|i| format!("  [{i}]")).unwrap_or_default();
        let _ = writeln!(out, "ε{tag}");
    } else {
        out.push_str("•\n");
        draw_tree(sig, &mut out, &leaves, &root, "");
    }
    out
}

/// ASCII picture: a domain tree and a range tree for Higman signatures, and a
/// numbered rule list for Brin signatures (whose trees are not planar).
pub fn ascii(g: &Element) -> String {
    let sig = g.signature();
    let g = g.simplify();
    let (dom, ran) = labels(&g);
    if sig.is_brin() {
        let mut out = String::new();
        for (d, r) in g.rules() {
            let tag = dom.get(d).map(|i| format!("  [{i}]")).unwrap_or_default();
            let _ = writeln!(out, "{} -> {}{tag}", format_word(&sig, d), format_word(&sig, r));
        }
        return out;
    }
    let domain: Vec<Word> = g.rules().iter().map(|(d, _)| d.clone()).collect();
    let range: Vec<Word> = g.rules().iter().map(|(_, r)| r.clone()).collect();
    format!(
        "domain\n{}\nrange\n{}",
        tree_text(&sig, &domain, &dom),
        tree_text(&sig, &range, &ran)
    )
}

fn node_id(sig: &Signature, w: &Word) -> String {
    format!("\"{}\"", format_word(sig, w))
}

/// Every node of the tree whose leaves are `words`, parents before children.
fn tree_nodes(words: &[Word]) -> Vec<Word> {
    let mut nodes = std::collections::BTreeSet::new();
    for w in words {
        for k in 0..=w.depth() {
            nodes.insert(w.truncate(k));
        }
    }
    let mut nodes: Vec<Word> = nodes.into_iter().collect();
    nodes.sort_by_key(|w| w.depth());
    nodes
}

fn digraph(sig: &Signature, name: &str, words: &[Word], labels: &BTreeMap<Word, usize>) -> String {
    let mut out = format!("digraph {name} {{\n  node [shape=point];\n");
    let nodes = tree_nodes(words);
    for w in &nodes {
        if words.contains(w) {
            let label = labels.get(w).map(|i| i.to_string()).unwrap_or_default();
            let _ = writeln!(out, "  {} [shape=plaintext, label=\"{label}\"];", node_id(sig, w));
        } else {
            let _ = writeln!(out, "  {};", node_id(sig, w));
        }
    }
    for w in &nodes {
        if w.depth() > 0 {
            let _ = writeln!(out, "  {} -> {};", node_id(sig, &w.parent(0)), node_id(sig, w));
        }
    }
    out.push_str("}\n");
    out
}

/// Graphviz text with two digraphs, `domain` and `range`, sharing leaf
/// labels. Brin elements are drawn with each leaf hanging off the root.
pub fn dot(g: &Element) -> String {
    let sig = g.signature();
    let g = g.simplify();
    let (dom, ran) = labels(&g);
    let domain: Vec<Word> = g.rules().iter().map(|(d, _)| d.clone()).collect();
    let range: Vec<Word> = g.rules().iter().map(|(_, r)| r.clone()).collect();
    if sig.is_brin() {
        return format!(
            "{}{}",
            flat_digraph(&sig, "domain", &domain, &dom),
            flat_digraph(&sig, "range", &range, &ran)
        );
    }
    format!(
        "{}{}",
        digraph(&sig, "domain", &domain, &dom),
        digraph(&sig, "range", &range, &ran)
    )
}

fn flat_digraph(sig: &Signature, name: &str, words: &[Word], labels: &BTreeMap<Word, usize>) -> String {
    let mut out = format!("digraph {name} {{\n  root [shape=point];\n");
    for w in words {
        let label = labels.get(w).map(|i| format!("{} [{i}]", format_word(sig, w)));
        let label = label.unwrap_or_else(|| format_word(sig, w));
        let _ = writeln!(out, "  {} [shape=plaintext, label=\"{label}\"];", node_id(sig, w));
        let _ = writeln!(out, "  root -> {};", node_id(sig, w));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use thompson_core::text::parse_cycles;

    #[test]
    fn swap_of_two_leaves_under_zero() {
        let v2 = Signature::higman(2).unwrap();
        let g = parse_cycles(&v2, "(00 01)").unwrap().to_element();
        let text = ascii(&g);
        let expected = "domain\n•\n├── 0\n│   ├── 00  [1]\n│   └── 01  [2]\n└── 1\n\n\
                        range\n•\n├── 0\n│   ├── 00  [2]\n│   └── 01  [1]\n└── 1\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn dot_has_two_graphs() {
        let v2 = Signature::higman(2).unwrap();
        let g = parse_cycles(&v2, "(00 01)").unwrap().to_element();
        let text = dot(&g);
        assert!(text.starts_with("digraph domain {"));
        assert!(text.contains("digraph range {"));
        assert!(text.contains("\"00\" [shape=plaintext, label=\"1\"]"));
        assert!(text.contains("\"1\" [shape=plaintext, label=\"\"]"));
        assert!(text.contains("\"ε\" -> \"0\""));
    }

    #[test]
    fn brin_rules_are_listed() {
        let b2 = Signature::brin(2).unwrap();
        let g = parse_cycles(&b2, "([0,0] [1,1])").unwrap().to_element();
        let text = ascii(&g);
        assert!(text.contains("[0,0] -> [1,1]  [1]"));
        assert!(dot(&g).contains("digraph range"));
    }
}
