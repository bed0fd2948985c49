//! Edmonds–Karp maximum flow over any exact ordered capacity type.

use std::collections::VecDeque;
use std::ops::{Add, Sub};

use num_traits::Zero;

/// Capacities must be exact: no rounding may ever happen inside the solver.
pub trait Capacity: Clone + Ord + Zero + Add<Output = Self> + Sub<Output = Self> {}

impl<T: Clone + Ord + Zero + Add<Output = T> + Sub<Output = T>> Capacity for T {}

#[derive(Clone, Debug)]
struct Arc<C> {
    to: usize,
    residual: C,
    capacity: C,
}

/// Residual network; arcs are stored in pairs so that `id ^ 1` is the reverse arc.
#[derive(Clone, Debug)]
pub struct FlowNetwork<C> {
    arcs: Vec<Arc<C>>,
    out: Vec<Vec<usize>>,
}

impl<C: Capacity> FlowNetwork<C> {
    pub fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    /// Adds an arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: C) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, residual: capacity.clone(), capacity });
        self.arcs.push(Arc { to: from, residual: C::zero(), capacity: C::zero() });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Flow currently carried by arc `id`.
    pub fn flow(&self, id: usize) -> C {
        let a = &self.arcs[id];
        a.capacity.clone() - a.residual.clone()
    }

    /// Augments along shortest residual paths until none remains; returns the flow value.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> C {
        let mut total = C::zero();
        loop {
            let mut via = vec![usize::MAX; self.out.len()];
            let mut queue = VecDeque::from([source]);
            let mut seen = vec![false; self.out.len()];
            seen[source] = true;
            while let Some(v) = queue.pop_front() {
                if v == sink {
                    break;
                }
                for &id in &self.out[v] {
                    let a = &self.arcs[id];
                    if !seen[a.to] && a.residual > C::zero() {
                        seen[a.to] = true;
                        via[a.to] = id;
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[sink] {
                return total;
            }
            let mut bottleneck: Option<C> = None;
            let mut v = sink;
            while v != source {
                let id = via[v];
                let r = self.arcs[id].residual.clone();
                bottleneck = Some(match bottleneck {
                    Some(b) if b <= r => b,
                    _ => r,
                });
                v = self.arcs[id ^ 1].to;
            }
            let b = bottleneck.expect("path has at least one arc");
            let mut v = sink;
            while v != source {
                let id = via[v];
                self.arcs[id].residual = self.arcs[id].residual.clone() - b.clone();
                self.arcs[id ^ 1].residual = self.arcs[id ^ 1].residual.clone() + b.clone();
                v = self.arcs[id ^ 1].to;
            }
            total = total + b;
        }
    }

    /// Nodes reachable from `source` through arcs with positive residual capacity.
    pub fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(v) = stack.pop() {
            for &id in &self.out[v] {
                let a = &self.arcs[id];
                if !seen[a.to] && a.residual > C::zero() {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}
