//! Compressed adjacency built by counting sort.

/// Indices `0..keys.len()` grouped by their key, in O(keys + key_count).
/// Within a group, indices keep ascending order.
#[derive(Debug, Clone)]
pub struct Adjacency {
    start: Vec<usize>,
    items: Vec<usize>,
}

impl Adjacency {
    pub fn group_by(keys: &[usize], key_count: usize) -> Self {
        let mut start = vec![0usize; key_count + 1];
        for &k in keys {
            start[k + 1] += 1;
        }
        for k in 0..key_count {
            start[k + 1] += start[k];
        }
        let mut fill = start.clone();
        let mut items = vec![0usize; keys.len()];
        for (i, &k) in keys.iter().enumerate() {
            items[fill[k]] = i;
            fill[k] += 1;
        }
        Self { start, items }
    }

    #[inline]
    pub fn get(&self, key: usize) -> &[usize] {
        &self.items[self.start[key]..self.start[key + 1]]
    }

    pub fn key_count(&self) -> usize {
        self.start.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_stably() {
        let adj = Adjacency::group_by(&[2, 0, 2, 1, 0], 4);
        assert_eq!(adj.get(0), &[1, 4]);
        assert_eq!(adj.get(1), &[3]);
        assert_eq!(adj.get(2), &[0, 2]);
        assert!(adj.get(3).is_empty());
        assert_eq!(adj.key_count(), 4);
    }

    #[test]
    fn empty_input() {
        let adj = Adjacency::group_by(&[], 3);
        assert!(adj.get(2).is_empty());
    }
}
