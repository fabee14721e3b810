//! Nested prefix tries for locating the cylinders of a finite word set that
//! meet a query cylinder.
//!
//! One trie per coordinate: a node at depth `j` in the trie for coordinate `i`
//! carries the trie for coordinate `i + 1` of all stored words whose `i`-th
//! coordinate is exactly the node's path. A stored word meets the query iff it
//! is comparable with the query in every coordinate, so each level walks the
//! ancestors of the query coordinate and then the whole subtree below it.

use alloc::vec;
use alloc::vec::Vec;

use crate::words::Word;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Node {
    children: Vec<u32>,
    next: u32,
    entries: Vec<u32>,
}

impl Node {
    fn new() -> Self {
        Node {
            children: Vec::new(),
            next: NONE,
            entries: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct CylinderIndex {
    dims: usize,
    alphabet: usize,
    nodes: Vec<Node>,
}

impl CylinderIndex {
    pub(crate) fn new(dims: usize, alphabet: usize) -> Self {
        CylinderIndex {
            dims,
            alphabet,
            nodes: vec![Node::new()],
        }
    }

    pub(crate) fn build<'a, I>(dims: usize, alphabet: usize, words: I) -> Self
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut index = Self::new(dims, alphabet);
        for (id, w) in words.into_iter().enumerate() {
            index.insert(w, id as u32);
        }
        index
    }

    fn child_or_insert(&mut self, node: usize, digit: u8) -> usize {
        if self.nodes[node].children.is_empty() {
            self.nodes[node].children = vec![NONE; self.alphabet];
        }
        let c = self.nodes[node].children[digit as usize];
        if c != NONE {
            return c as usize;
        }
        let id = self.nodes.len();
        self.nodes.push(Node::new());
        self.nodes[node].children[digit as usize] = id as u32;
        id
    }

    pub(crate) fn insert(&mut self, word: &Word, id: u32) {
        let mut node = 0usize;
        for i in 0..self.dims {
            for &d in word.coord(i) {
                node = self.child_or_insert(node, d);
            }
            if i + 1 == self.dims {
                self.nodes[node].entries.push(id);
            } else {
                let next = self.nodes[node].next;
                node = if next == NONE {
                    let id = self.nodes.len();
                    self.nodes.push(Node::new());
                    self.nodes[node].next = id as u32;
                    id
                } else {
                    next as usize
                };
            }
        }
    }

    /// Calls `f` with the id of every stored word comparable with `word` in
    /// every coordinate, i.e. whose cylinder meets the cylinder of `word`.
    pub(crate) fn for_each_meeting<F: FnMut(u32)>(&self, word: &Word, mut f: F) {
        self.visit(0, 0, word, &mut f);
    }

    pub(crate) fn meeting(&self, word: &Word) -> Vec<u32> {
        let mut out = Vec::new();
        self.for_each_meeting(word, |id| out.push(id));
        out
    }

    fn here<F: FnMut(u32)>(&self, node: usize, coord: usize, word: &Word, f: &mut F) {
        let n = &self.nodes[node];
        if coord + 1 == self.dims {
            for &e in &n.entries {
                f(e);
            }
        } else if n.next != NONE {
            self.visit(n.next as usize, coord + 1, word, f);
        }
    }

    fn visit<F: FnMut(u32)>(&self, root: usize, coord: usize, word: &Word, f: &mut F) {
        let mut cur = root;
        for &d in word.coord(coord) {
            self.here(cur, coord, word, f);
            let children = &self.nodes[cur].children;
            if children.is_empty() {
                return;
            }
            let c = children[d as usize];
            if c == NONE {
                return;
            }
            cur = c as usize;
        }
        let mut stack = vec![cur];
        while let Some(n) = stack.pop() {
            self.here(n, coord, word, f);
            for &c in self.nodes[n].children.iter().rev() {
                if c != NONE {
                    stack.push(c as usize);
                }
            }
        }
    }
}
