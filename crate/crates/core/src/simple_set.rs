//! Bounded integer sets with O(1) add/remove and no duplicate check.

use std::collections::VecDeque;

/// A bag of small integers. `add` does not check for duplicates and
/// `remove` may return any element that is present.
pub trait Worklist {
    /// An empty set for numbers in `0..range`.
    fn with_range(range: usize) -> Self;
    fn add(&mut self, i: usize);
    fn remove(&mut self) -> Option<usize>;
    fn is_empty(&self) -> bool;
    fn len(&self) -> usize;
    /// Current contents, in no particular order.
    fn items(&self) -> Vec<usize>;
}

/// Stack-backed simple set; `remove` is LIFO.
#[derive(Debug, Clone, Default)]
pub struct SimpleSet {
    stack: Vec<usize>,
    range: usize,
}

impl SimpleSet {
    pub fn new(range: usize) -> Self {
        Self {
            stack: Vec::with_capacity(range),
            range,
        }
    }
}

impl Worklist for SimpleSet {
    fn with_range(range: usize) -> Self {
        Self::new(range)
    }

    #[inline]
    fn add(&mut self, i: usize) {
        debug_assert!(i < self.range, "{i} outside 0..{}", self.range);
        self.stack.push(i);
    }

    #[inline]
    fn remove(&mut self) -> Option<usize> {
        self.stack.pop()
    }

    #[inline]
    fn is_empty(&self) -> bool {
        self.stack.is_empty()
    }

    fn len(&self) -> usize {
        self.stack.len()
    }

    fn items(&self) -> Vec<usize> {
        self.stack.clone()
    }
}

/// Queue-backed variant; `remove` is FIFO. Only used to check that the
/// minimizer's result does not depend on the removal order.
#[derive(Debug, Clone, Default)]
pub struct FifoSet {
    queue: VecDeque<usize>,
    range: usize,
}

impl Worklist for FifoSet {
    fn with_range(range: usize) -> Self {
        Self {
            queue: VecDeque::with_capacity(range),
            range,
        }
    }

    fn add(&mut self, i: usize) {
        debug_assert!(i < self.range, "{i} outside 0..{}", self.range);
        self.queue.push_back(i);
    }

    fn remove(&mut self) -> Option<usize> {
        self.queue.pop_front()
    }

    fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }

    fn len(&self) -> usize {
        self.queue.len()
    }

    fn items(&self) -> Vec<usize> {
        self.queue.iter().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stack_order() {
        let mut s = SimpleSet::new(10);
        assert!(s.is_empty());
        s.add(3);
        s.add(7);
        s.add(3);
        assert_eq!(s.len(), 3);
        assert_eq!(s.remove(), Some(3));
        assert_eq!(s.remove(), Some(7));
        assert_eq!(s.remove(), Some(3));
        assert_eq!(s.remove(), None);
        assert!(s.is_empty());
    }

    #[test]
    fn queue_order() {
        let mut s = FifoSet::with_range(10);
        s.add(3);
        s.add(7);
        assert_eq!(s.remove(), Some(3));
        assert_eq!(s.items(), vec![7]);
    }
}
