use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{minimal_generator_indices, FreeModule, FreeModuleElement, GbConfig, MatrixJson, PolyMatrix, Rational};

/// A graded module `coker(relations)` over `ℚ[t_1, …, t_nvars]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    nvars: usize,
    relations: PolyMatrix,
}

impl GradedPresentation {
    /// Zero columns are dropped.
    pub fn new(nvars: usize, relations: PolyMatrix) -> Result<Self> {
        let vars = relations.support_len();
        if vars > nvars {
            return Err(Error::Shape(format!("entries use t{vars} but the ring has {nvars} variables")));
        }
        Ok(GradedPresentation {
            nvars,
            relations: relations.without_zero_columns(),
        })
    }

    /// The free module itself, with no relations.
    pub fn free(nvars: usize, generators: FreeModule) -> Self {
        GradedPresentation {
            nvars,
            relations: PolyMatrix::zero(generators, FreeModule::zero()),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        GradedPresentation::free(nvars, FreeModule::zero())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &FreeModule {
        &self.relations.target
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn relation_degrees(&self) -> &[i64] {
        &self.relations.source.degrees
    }

    pub fn num_generators(&self) -> usize {
        self.relations.nrows()
    }

    pub fn num_relations(&self) -> usize {
        self.relations.ncols()
    }

    /// `M[l]`: every degree raised by `l`.
    pub fn shifted(&self, l: i64) -> Self {
        GradedPresentation {
            nvars: self.nvars,
            relations: self.relations.shifted(l),
        }
    }

    pub fn direct_sum(&self, other: &GradedPresentation) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::Shape("direct sum over different rings".into()));
        }
        Ok(GradedPresentation {
            nvars: self.nvars,
            relations: self.relations.direct_sum(&other.relations),
        })
    }

    /// Removes redundant generators and relations.
    ///
    /// While some relation has a nonzero constant entry, the one with the
    /// lowest (column, row) index is used to eliminate its generator and
    /// the relation itself; afterwards the relations are thinned to a
    /// minimal generating set.
    pub fn minimize(&self, cfg: &GbConfig) -> Result<GradedPresentation> {
        let mut target = self.relations.target.degrees.clone();
        let mut source = self.relations.source.degrees.clone();
        let mut cols = self.relations.columns.clone();
        while let Some((j, i, c)) = find_unit(&cols) {
            let pivot = cols.remove(j);
            source.remove(j);
            let inv = c.recip();
            for col in cols.iter_mut() {
                let f = col.coordinate(i);
                if !f.is_zero() {
                    let step = pivot.mul_poly(&f.scale(&inv));
                    *col = &*col - &step;
                }
                *col = col.map_components(|k| if k > i { k - 1 } else { k });
            }
            target.remove(i);
            let keep: Vec<usize> = (0..cols.len()).filter(|&k| !cols[k].is_zero()).collect();
            cols = keep.iter().map(|&k| cols[k].clone()).collect();
            source = keep.iter().map(|&k| source[k]).collect();
        }
        let target = FreeModule::new(target);
        let idx = minimal_generator_indices(&cols, &target, cfg)?;
        let source = FreeModule::new(idx.iter().map(|&k| source[k]).collect());
        let cols = idx.iter().map(|&k| cols[k].clone()).collect();
        Ok(GradedPresentation {
            nvars: self.nvars,
            relations: PolyMatrix::new(target, source, cols)?,
        })
    }

    /// Auslander–Bridger transpose: the cokernel of the dual of the
    /// relation matrix, degrees negated.
    pub fn auslander_transpose(&self) -> GradedPresentation {
        GradedPresentation {
            nvars: self.nvars,
            relations: self.relations.transpose().without_zero_columns(),
        }
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            nvars: self.nvars,
            matrix: MatrixJson::from(&self.relations),
        }
    }
}

fn find_unit(cols: &[FreeModuleElement]) -> Option<(usize, usize, Rational)> {
    cols.iter().enumerate().find_map(|(j, col)| {
        col.terms()
            .filter(|(_, m, _)| m.is_one())
            .min_by_key(|(_, _, i)| *i)
            .map(|(c, _, i)| (j, i, c.clone()))
    })
}

/// Serialized presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub nvars: usize,
    pub matrix: MatrixJson,
}

impl TryFrom<&PresentationJson> for GradedPresentation {
    type Error = Error;
    fn try_from(j: &PresentationJson) -> Result<Self> {
        GradedPresentation::new(j.nvars, PolyMatrix::try_from(&j.matrix)?)
    }
}
