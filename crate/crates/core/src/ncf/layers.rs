use std::ops::Range;

use crate::bf::Permutation;
use crate::error::{Error, Result};
use crate::ncf::NcfRepr;

/// A maximal run of consecutive rules with the same canalyzed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    /// 0-based rule positions covered by the layer.
    pub rules: Range<usize>,
    pub canalyzed: bool,
    /// Number of rules in the layer with canalyzing value 1.
    pub ones: usize,
    /// Number of rules in the layer with canalyzing value 0.
    pub zeros: usize,
}

impl Layer {
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// 1 or 2.
    pub fn distinct_canalyzing_values(&self) -> usize {
        usize::from(self.ones > 0) + usize::from(self.zeros > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub layers: Vec<Layer>,
}

impl LayerDecomposition {
    /// Layer count `q`.
    pub fn q(&self) -> usize {
        self.layers.len()
    }

    /// Layers whose rules all share one canalyzing value.
    pub fn r1(&self) -> usize {
        self.layers
            .iter()
            .filter(|l| l.distinct_canalyzing_values() == 1)
            .count()
    }

    /// Layers containing both canalyzing values.
    pub fn r2(&self) -> usize {
        self.layers
            .iter()
            .filter(|l| l.distinct_canalyzing_values() == 2)
            .count()
    }

    /// Index of the layer containing rule position `pos`.
    pub fn layer_of(&self, pos: usize) -> usize {
        self.layers
            .iter()
            .position(|l| l.rules.contains(&pos))
            .expect("rule position out of range")
    }
}

impl NcfRepr {
    /// Splits the rule list into layers. Works on any representation;
    /// symmetry results assume the input was normalized first.
    pub fn layers(&self) -> LayerDecomposition {
        let mut layers: Vec<Layer> = Vec::new();
        for (pos, rule) in self.rules().iter().enumerate() {
            match layers.last_mut() {
                Some(layer) if layer.canalyzed == rule.canalyzed => {
                    layer.rules.end = pos + 1;
                }
                _ => layers.push(Layer {
                    rules: pos..pos + 1,
                    canalyzed: rule.canalyzed,
                    ones: 0,
                    zeros: 0,
                }),
            }
            let layer = layers.last_mut().unwrap();
            if rule.canalyzing {
                layer.ones += 1;
            } else {
                layer.zeros += 1;
            }
        }
        LayerDecomposition { layers }
    }

    /// Reorders the rules of layer `layer_index` (0-based): new position `k`
    /// within the layer takes the rule previously at position `perm(k)`.
    pub fn permute_within_layer(&self, layer_index: usize, perm: &Permutation) -> Result<NcfRepr> {
        let decomposition = self.layers();
        let layer = decomposition.layers.get(layer_index).ok_or_else(|| {
            Error::Domain(format!(
                "layer {layer_index} out of range ({} layers)",
                decomposition.q()
            ))
        })?;
        let range = layer.rules.clone();
        let reordered = perm.reorder(&self.rules()[range.clone()])?;
        let mut rules = self.rules().to_vec();
        rules.splice(range, reordered);
        Ok(NcfRepr::from_parts_unchecked(rules))
    }
}
