//! Row-major multi-channel image grids.

use crate::error::{Error, Result};

/// H x W x C grid of 32-bit reals, row-major. Carries frames, depth maps,
/// masks, label maps and feature maps.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageGrid {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<f32>,
}

impl ImageGrid {
    pub fn new(width: usize, height: usize, channels: usize) -> Self {
        Self {
            width,
            height,
            channels,
            data: vec![0.0; width * height * channels],
        }
    }

    pub fn filled(width: usize, height: usize, channels: usize, value: f32) -> Self {
        Self {
            width,
            height,
            channels,
            data: vec![value; width * height * channels],
        }
    }

    pub fn from_data(width: usize, height: usize, channels: usize, data: Vec<f32>) -> Result<Self> {
        if data.len() != width * height * channels {
            return Err(Error::ShapeMismatch(format!(
                "expected {}x{}x{} = {} values, got {}",
                width,
                height,
                channels,
                width * height * channels,
                data.len()
            )));
        }
        Ok(Self {
            width,
            height,
            channels,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f32> {
        self.data
    }

    #[inline]
    pub fn idx(&self, col: usize, row: usize) -> usize {
        (row * self.width + col) * self.channels
    }

    /// All channels of one pixel.
    #[inline]
    pub fn px(&self, col: usize, row: usize) -> &[f32] {
        let i = self.idx(col, row);
        &self.data[i..i + self.channels]
    }

    #[inline]
    pub fn px_mut(&mut self, col: usize, row: usize) -> &mut [f32] {
        let i = self.idx(col, row);
        let c = self.channels;
        &mut self.data[i..i + c]
    }

    #[inline]
    pub fn get(&self, col: usize, row: usize, ch: usize) -> f32 {
        self.data[self.idx(col, row) + ch]
    }

    #[inline]
    pub fn set(&mut self, col: usize, row: usize, ch: usize, v: f32) {
        let i = self.idx(col, row) + ch;
        self.data[i] = v;
    }

    pub fn same_shape(&self, other: &ImageGrid) -> bool {
        self.width == other.width && self.height == other.height && self.channels == other.channels
    }

    pub fn same_size(&self, other: &ImageGrid) -> bool {
        self.width == other.width && self.height == other.height
    }

    pub fn ensure_same_shape(&self, other: &ImageGrid, what: &str) -> Result<()> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch(format!(
                "{what}: {}x{}x{} vs {}x{}x{}",
                self.width, self.height, self.channels, other.width, other.height, other.channels
            )));
        }
        Ok(())
    }

    /// True everywhere the grid holds only 0.0 or 1.0.
    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&v| v == 0.0 || v == 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_is_row_major() {
        let mut g = ImageGrid::new(4, 3, 2);
        g.set(2, 1, 1, 7.0);
        assert_eq!(g.data()[(1 * 4 + 2) * 2 + 1], 7.0);
        assert_eq!(g.get(2, 1, 1), 7.0);
        assert_eq!(g.px(2, 1), &[0.0, 7.0]);
    }

    #[test]
    fn from_data_rejects_bad_length() {
        assert!(ImageGrid::from_data(2, 2, 1, vec![0.0; 5]).is_err());
    }
}
