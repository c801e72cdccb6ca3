//! Dinic max-flow on small integer networks.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

#[derive(Clone, Debug)]
pub struct MaxFlow {
    adj: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Handle to a forward arc, used to read back its flow.
#[derive(Clone, Copy, Debug)]
pub struct ArcRef {
    node: usize,
    idx: usize,
    cap: i64,
}

impl MaxFlow {
    pub fn new(n: usize) -> Self {
        MaxFlow { adj: vec![Vec::new(); n], level: vec![0; n], iter: vec![0; n] }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> ArcRef {
        let idx = self.adj[from].len();
        let rev = self.adj[to].len() + usize::from(from == to);
        self.adj[from].push(Arc { to, cap, rev });
        self.adj[to].push(Arc { to: from, cap: 0, rev: idx });
        ArcRef { node: from, idx, cap }
    }

    pub fn flow_on(&self, arc: ArcRef) -> i64 {
        arc.cap - self.adj[arc.node][arc.idx].cap
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for a in &self.adj[v] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.adj[v].len() {
            let i = self.iter[v];
            let Arc { to, cap, rev } = self.adj[v][i];
            if cap > 0 && self.level[v] < self.level[to] {
                let d = self.dfs(to, t, f.min(cap));
                if d > 0 {
                    self.adj[v][i].cap -= d;
                    self.adj[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn run(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let mut g = MaxFlow::new(4);
        let a = g.add_arc(0, 1, 3);
        g.add_arc(0, 2, 2);
        g.add_arc(1, 3, 2);
        g.add_arc(2, 3, 3);
        g.add_arc(1, 2, 1);
        assert_eq!(g.run(0, 3), 5);
        assert_eq!(g.flow_on(a), 3);
    }

    #[test]
    fn disconnected() {
        let mut g = MaxFlow::new(3);
        g.add_arc(0, 1, 5);
        assert_eq!(g.run(0, 2), 0);
    }
}
