/// Dense partial table indexed by two small integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Table {
    cols: usize,
    entries: Vec<u32>,
}

const EMPTY: u32 = u32::MAX;

impl Table {
    pub(crate) fn new(rows: usize, cols: usize) -> Self {
        Table {
            cols,
            entries: vec![EMPTY; rows * cols],
        }
    }

    #[inline]
    pub(crate) fn get(&self, row: usize, col: usize) -> Option<usize> {
        match self.entries[row * self.cols + col] {
            EMPTY => None,
            v => Some(v as usize),
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: usize) {
        self.entries[row * self.cols + col] = value as u32;
    }

    pub(crate) fn is_set(&self, row: usize, col: usize) -> bool {
        self.entries[row * self.cols + col] != EMPTY
    }
}
