use indexmap::IndexMap;

use crate::grid::{bounding_box, GridPath, GridPoint};

/// Assignment of one grid path per vertex label. Insertion order is kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Representation {
    paths: IndexMap<String, GridPath>,
}

impl Representation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts or replaces the path of `label`, returning the old one.
    pub fn insert(&mut self, label: impl Into<String>, path: GridPath) -> Option<GridPath> {
        self.paths.insert(label.into(), path)
    }

    pub fn get(&self, label: &str) -> Option<&GridPath> {
        self.paths.get(label)
    }

    pub fn remove(&mut self, label: &str) -> Option<GridPath> {
        self.paths.shift_remove(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &GridPath)> {
        self.paths.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.paths.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn max_bends(&self) -> usize {
        self.paths.values().map(GridPath::bends).max().unwrap_or(0)
    }

    pub fn all_monotonic(&self) -> bool {
        self.paths.values().all(GridPath::is_monotonic)
    }

    /// Inclusive bounding box over all path points.
    pub fn extent(&self) -> Option<(GridPoint, GridPoint)> {
        bounding_box(self.paths.values().flat_map(|p| p.points().iter().copied()))
    }

    pub fn map_paths(&self, mut f: impl FnMut(&str, &GridPath) -> GridPath) -> Self {
        Self {
            paths: self.paths.iter().map(|(k, p)| (k.clone(), f(k, p))).collect(),
        }
    }

    pub fn translated(&self, dc: i64, dr: i64) -> Self {
        self.map_paths(|_, p| p.translated(dc, dr))
    }

    pub fn scaled(&self, factor: i64) -> Self {
        self.map_paths(|_, p| p.scaled(factor))
    }

    /// Restriction to the given labels, in the given order.
    pub fn subset<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Self {
        Self {
            paths: labels
                .into_iter()
                .filter_map(|l| self.paths.get(l).map(|p| (l.to_owned(), p.clone())))
                .collect(),
        }
    }
}

impl<S: Into<String>> FromIterator<(S, GridPath)> for Representation {
    fn from_iter<T: IntoIterator<Item = (S, GridPath)>>(iter: T) -> Self {
        Self {
            paths: iter.into_iter().map(|(k, p)| (k.into(), p)).collect(),
        }
    }
}

impl std::ops::Index<&str> for Representation {
    type Output = GridPath;

    fn index(&self, label: &str) -> &GridPath {
        self.paths
            .get(label)
            .unwrap_or_else(|| panic!("no path for vertex {label:?}"))
    }
}
