//! The k*20 → j → 1 sigmoid feed-forward network, batch backpropagation, and
//! cross-validation early stopping.
//!
//! Training is deliberately plain: full-batch gradient accumulation, a fixed
//! learning rate, no momentum, no weight decay. The error being minimized is
//! E = ½ Σ (target − output)² over a sample set.

use std::io::{BufRead, BufReader, Read, Write};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::descriptor::{PaddingPolicy, DESCRIPTOR_LEN};
use crate::error::SbdError;
use crate::lexicon::UnknownWordPolicy;

/// Architecture and training hyperparameters.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkConfig {
    /// Context tokens per candidate (k/2 on each side). Must be even.
    pub context_k: usize,
    /// Hidden units.
    pub hidden_j: usize,
    pub learning_rate: f64,
    pub max_epochs: usize,
    /// Epochs without a cross-error improvement before training stops.
    pub patience: usize,
    pub seed: u64,
    /// Initial weights are drawn uniformly from [-init_range, init_range].
    pub init_range: f64,
}

impl Default for NetworkConfig {
    fn default() -> Self {
        NetworkConfig {
            context_k: 6,
            hidden_j: 2,
            learning_rate: 0.08,
            max_epochs: 5000,
            patience: 50,
            seed: 0,
            init_range: 0.5,
        }
    }
}

impl NetworkConfig {
    pub fn validate(&self) -> Result<(), SbdError> {
        if self.context_k == 0 || !self.context_k.is_multiple_of(2) {
            return Err(SbdError::Contract(format!(
                "context_k must be a positive even integer, got {}",
                self.context_k
            )));
        }
        if self.hidden_j == 0 {
            return Err(SbdError::Contract("hidden_j must be positive".into()));
        }
        if !self.learning_rate.is_finite() || self.learning_rate <= 0.0 {
            return Err(SbdError::Contract(format!(
                "learning_rate must be positive, got {}",
                self.learning_rate
            )));
        }
        if self.max_epochs == 0 {
            return Err(SbdError::Contract("max_epochs must be positive".into()));
        }
        if self.patience == 0 || self.patience > self.max_epochs {
            return Err(SbdError::Contract(format!(
                "patience must be in 1..=max_epochs, got {}",
                self.patience
            )));
        }
        if !self.init_range.is_finite() || self.init_range < 0.0 {
            return Err(SbdError::Contract(format!(
                "init_range must be non-negative, got {}",
                self.init_range
            )));
        }
        Ok(())
    }

    /// Network input width: one descriptor array per context token.
    pub fn input_dim(&self) -> usize {
        self.context_k * DESCRIPTOR_LEN
    }
}

/// One training or evaluation item: a flattened context window and its
/// boundary truth (0 or 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub input: Vec<f64>,
    pub target: f64,
}

/// Per-epoch record of a training run.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingHistory {
    pub epochs_run: usize,
    pub train_error_per_epoch: Vec<f64>,
    pub cross_error_per_epoch: Vec<f64>,
    /// Epoch whose weight snapshot was returned: the cross-error minimum.
    pub best_epoch: usize,
}

/// Gradient of the batch error with respect to every weight and bias, in the
/// same layout as [`Network`].
#[derive(Debug, Clone)]
pub struct Gradients {
    pub w_ih: Vec<f64>,
    pub b_h: Vec<f64>,
    pub w_ho: Vec<f64>,
    pub b_o: f64,
}

impl Gradients {
    fn zeros(input_dim: usize, hidden: usize) -> Self {
        Gradients {
            w_ih: vec![0.0; input_dim * hidden],
            b_h: vec![0.0; hidden],
            w_ho: vec![0.0; hidden],
            b_o: 0.0,
        }
    }

    /// Flat view in parameter order (matches [`Network::param`]).
    pub fn flat(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.w_ih.len() + 2 * self.b_h.len() + 1);
        v.extend_from_slice(&self.w_ih);
        v.extend_from_slice(&self.b_h);
        v.extend_from_slice(&self.w_ho);
        v.push(self.b_o);
        v
    }
}

/// Weights and biases of the two-layer sigmoid network.
///
/// `w_ih` is stored hidden-major: `w_ih[h * input_dim + i]` connects input
/// `i` to hidden unit `h`. Parameter order for serialization and flat access
/// is w_ih, b_h, w_ho, b_o.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    w_ih: Vec<f64>,
    b_h: Vec<f64>,
    w_ho: Vec<f64>,
    b_o: f64,
    config: NetworkConfig,
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

impl Network {
    /// Seeded uniform initialization in [-init_range, init_range]. The same
    /// seed always produces bitwise-identical weights.
    pub fn init(config: NetworkConfig) -> Result<Network, SbdError> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let r = config.init_range;
        let mut draw = |n: usize| -> Vec<f64> {
            (0..n)
                .map(|_| {
                    if r == 0.0 {
                        0.0
                    } else {
                        rng.random_range(-r..=r)
                    }
                })
                .collect()
        };
        let input_dim = config.input_dim();
        let w_ih = draw(input_dim * config.hidden_j);
        let b_h = draw(config.hidden_j);
        let w_ho = draw(config.hidden_j);
        let b_o = draw(1)[0];
        Ok(Network {
            w_ih,
            b_h,
            w_ho,
            b_o,
            config,
        })
    }

    pub fn config(&self) -> &NetworkConfig {
        &self.config
    }

    pub fn input_dim(&self) -> usize {
        self.config.input_dim()
    }

    fn check_input(&self, input: &[f64]) -> Result<(), SbdError> {
        if input.len() != self.input_dim() {
            return Err(SbdError::Dimension {
                expected: self.input_dim(),
                got: input.len(),
            });
        }
        Ok(())
    }

    fn hidden_activations(&self, input: &[f64]) -> Vec<f64> {
        let d = self.input_dim();
        (0..self.config.hidden_j)
            .map(|h| {
                let row = &self.w_ih[h * d..(h + 1) * d];
                let pre: f64 = self.b_h[h]
                    + row.iter().zip(input).map(|(w, x)| w * x).sum::<f64>();
                sigmoid(pre)
            })
            .collect()
    }

    /// Network output for one input vector; always strictly inside (0, 1).
    pub fn forward(&self, input: &[f64]) -> Result<f64, SbdError> {
        self.check_input(input)?;
        let hidden = self.hidden_activations(input);
        let pre: f64 = self.b_o
            + self
                .w_ho
                .iter()
                .zip(&hidden)
                .map(|(w, a)| w * a)
                .sum::<f64>();
        Ok(sigmoid(pre))
    }

    /// E = ½ Σ (target − output)² over `samples`.
    pub fn set_error(&self, samples: &[Sample]) -> Result<f64, SbdError> {
        let mut e = 0.0;
        for s in samples {
            let out = self.forward(&s.input)?;
            let diff = s.target - out;
            e += 0.5 * diff * diff;
        }
        Ok(e)
    }

    /// Analytic gradient of the batch error, summed over all samples.
    #[allow(clippy::needless_range_loop)]
    pub fn batch_gradients(&self, samples: &[Sample]) -> Result<Gradients, SbdError> {
        if samples.is_empty() {
            return Err(SbdError::Contract(
                "batch_gradients requires a non-empty sample set".into(),
            ));
        }
        let d = self.input_dim();
        let mut g = Gradients::zeros(d, self.config.hidden_j);
        for s in samples {
            self.check_input(&s.input)?;
            let hidden = self.hidden_activations(&s.input);
            let out = {
                let pre: f64 = self.b_o
                    + self
                        .w_ho
                        .iter()
                        .zip(&hidden)
                        .map(|(w, a)| w * a)
                        .sum::<f64>();
                sigmoid(pre)
            };
            let delta_o = (out - s.target) * out * (1.0 - out);
            g.b_o += delta_o;
            for h in 0..self.config.hidden_j {
                g.w_ho[h] += delta_o * hidden[h];
                let delta_h = delta_o * self.w_ho[h] * hidden[h] * (1.0 - hidden[h]);
                g.b_h[h] += delta_h;
                let row = &mut g.w_ih[h * d..(h + 1) * d];
                for (gw, x) in row.iter_mut().zip(&s.input) {
                    *gw += delta_h * x;
                }
            }
        }
        Ok(g)
    }

    fn apply_update(&mut self, g: &Gradients, learning_rate: f64) {
        for (w, gw) in self.w_ih.iter_mut().zip(&g.w_ih) {
            *w -= learning_rate * gw;
        }
        for (b, gb) in self.b_h.iter_mut().zip(&g.b_h) {
            *b -= learning_rate * gb;
        }
        for (w, gw) in self.w_ho.iter_mut().zip(&g.w_ho) {
            *w -= learning_rate * gw;
        }
        self.b_o -= learning_rate * g.b_o;
    }

    /// Full-batch gradient descent with early stopping on the cross set.
    /// Each epoch updates once on the training set, then records the train
    /// and cross errors. Training stops when the cross error has not improved
    /// for `patience` epochs (or at `max_epochs`), and the returned network
    /// is the snapshot from the epoch of minimum cross error.
    pub fn train(
        &self,
        train_set: &[Sample],
        cross_set: &[Sample],
    ) -> Result<(Network, TrainingHistory), SbdError> {
        if train_set.is_empty() || cross_set.is_empty() {
            return Err(SbdError::Contract(
                "train and cross sets must be non-empty".into(),
            ));
        }
        let lr = self.config.learning_rate;
        let mut current = self.clone();
        let mut best = current.clone();
        let mut best_cross = f64::INFINITY;
        let mut best_epoch = 0usize;
        let mut train_errors = Vec::new();
        let mut cross_errors = Vec::new();

        for epoch in 0..self.config.max_epochs {
            let grads = current.batch_gradients(train_set)?;
            current.apply_update(&grads, lr);
            let train_err = current.set_error(train_set)?;
            let cross_err = current.set_error(cross_set)?;
            if !train_err.is_finite() || !cross_err.is_finite() {
                return Err(SbdError::Divergence { epoch });
            }
            train_errors.push(train_err);
            cross_errors.push(cross_err);
            if cross_err < best_cross {
                best_cross = cross_err;
                best_epoch = epoch;
                best = current.clone();
            }
            if epoch - best_epoch >= self.config.patience {
                break;
            }
        }

        let history = TrainingHistory {
            epochs_run: train_errors.len(),
            train_error_per_epoch: train_errors,
            cross_error_per_epoch: cross_errors,
            best_epoch,
        };
        Ok((best, history))
    }

    /// Total number of parameters (weights + biases).
    pub fn param_count(&self) -> usize {
        self.w_ih.len() + self.b_h.len() + self.w_ho.len() + 1
    }

    /// Flat parameter access in serialization order: w_ih, b_h, w_ho, b_o.
    pub fn param(&self, index: usize) -> f64 {
        let n_ih = self.w_ih.len();
        let n_h = self.b_h.len();
        if index < n_ih {
            self.w_ih[index]
        } else if index < n_ih + n_h {
            self.b_h[index - n_ih]
        } else if index < n_ih + 2 * n_h {
            self.w_ho[index - n_ih - n_h]
        } else {
            self.b_o
        }
    }

    pub fn set_param(&mut self, index: usize, value: f64) {
        let n_ih = self.w_ih.len();
        let n_h = self.b_h.len();
        if index < n_ih {
            self.w_ih[index] = value;
        } else if index < n_ih + n_h {
            self.b_h[index - n_ih] = value;
        } else if index < n_ih + 2 * n_h {
            self.w_ho[index - n_ih - n_h] = value;
        } else {
            self.b_o = value;
        }
    }
}

/// Compatibility metadata stored alongside the weights in a model file, so a
/// model can refuse to run against a lexicon or tag map it was not trained
/// with, and so labeling reuses the training-time policies.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ModelMeta {
    pub tagmap_fingerprint: String,
    pub lexicon_identity: String,
    pub padding: PaddingPolicy,
    pub unknown_policy: UnknownWordPolicy,
}

const MODEL_FORMAT: &str = "sbd-model v1";

/// Writes a network (with metadata) as versioned UTF-8 text. Weights are
/// encoded as raw f64 bits in hex, so loading reproduces them exactly.
pub fn save_model(net: &Network, meta: &ModelMeta, sink: &mut dyn Write) -> Result<(), SbdError> {
    let c = net.config();
    writeln!(sink, "{MODEL_FORMAT}")?;
    writeln!(sink, "context_k {}", c.context_k)?;
    writeln!(sink, "hidden_j {}", c.hidden_j)?;
    writeln!(sink, "learning_rate {}", c.learning_rate)?;
    writeln!(sink, "max_epochs {}", c.max_epochs)?;
    writeln!(sink, "patience {}", c.patience)?;
    writeln!(sink, "seed {}", c.seed)?;
    writeln!(sink, "init_range {}", c.init_range)?;
    writeln!(sink, "padding {}", meta.padding.name())?;
    writeln!(sink, "unknown_lowercase {}", meta.unknown_policy.name())?;
    writeln!(sink, "tagmap_fingerprint {}", meta.tagmap_fingerprint)?;
    writeln!(sink, "lexicon_identity {}", meta.lexicon_identity)?;
    for (label, block) in [("w_ih", &net.w_ih), ("b_h", &net.b_h), ("w_ho", &net.w_ho)] {
        write!(sink, "{label}")?;
        for w in block.iter() {
            write!(sink, " {:016x}", w.to_bits())?;
        }
        writeln!(sink)?;
    }
    writeln!(sink, "b_o {:016x}", net.b_o.to_bits())?;
    writeln!(sink, "end")?;
    Ok(())
}

/// Loads a model written by [`save_model`]. Any truncation, version skew, or
/// dimension inconsistency is an error and no partial network is returned.
pub fn load_model(source: &mut dyn Read) -> Result<(Network, ModelMeta), SbdError> {
    let reader = BufReader::new(source);
    let mut lines = reader.lines();
    let mut next_line = |what: &str| -> Result<String, SbdError> {
        match lines.next() {
            Some(Ok(l)) => Ok(l),
            Some(Err(e)) => Err(SbdError::Io(e)),
            None => Err(SbdError::ModelFormat(format!(
                "truncated model file: missing {what}"
            ))),
        }
    };

    let header = next_line("header")?;
    if header.trim() != MODEL_FORMAT {
        return Err(SbdError::ModelFormat(format!(
            "unsupported model format {header:?} (expected {MODEL_FORMAT:?})"
        )));
    }

    fn field<'a>(line: &'a str, key: &str) -> Result<&'a str, SbdError> {
        line.strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .map(str::trim)
            .ok_or_else(|| SbdError::ModelFormat(format!("expected `{key} ...`, got {line:?}")))
    }

    fn parse_num<T: std::str::FromStr>(s: &str, key: &str) -> Result<T, SbdError> {
        s.parse()
            .map_err(|_| SbdError::ModelFormat(format!("invalid value {s:?} for {key}")))
    }

    let context_k: usize = parse_num(field(&next_line("context_k")?, "context_k")?, "context_k")?;
    let hidden_j: usize = parse_num(field(&next_line("hidden_j")?, "hidden_j")?, "hidden_j")?;
    let learning_rate: f64 = parse_num(
        field(&next_line("learning_rate")?, "learning_rate")?,
        "learning_rate",
    )?;
    let max_epochs: usize =
        parse_num(field(&next_line("max_epochs")?, "max_epochs")?, "max_epochs")?;
    let patience: usize = parse_num(field(&next_line("patience")?, "patience")?, "patience")?;
    let seed: u64 = parse_num(field(&next_line("seed")?, "seed")?, "seed")?;
    let init_range: f64 =
        parse_num(field(&next_line("init_range")?, "init_range")?, "init_range")?;
    let padding_name = field(&next_line("padding")?, "padding")?.to_string();
    let padding = PaddingPolicy::from_name(&padding_name)
        .ok_or_else(|| SbdError::ModelFormat(format!("unknown padding policy {padding_name:?}")))?;
    let unknown_name = field(&next_line("unknown_lowercase")?, "unknown_lowercase")?.to_string();
    let unknown_policy = UnknownWordPolicy::from_name(&unknown_name).ok_or_else(|| {
        SbdError::ModelFormat(format!("unknown unknown-word policy {unknown_name:?}"))
    })?;
    let tagmap_fingerprint =
        field(&next_line("tagmap_fingerprint")?, "tagmap_fingerprint")?.to_string();
    let lexicon_identity =
        field(&next_line("lexicon_identity")?, "lexicon_identity")?.to_string();

    let config = NetworkConfig {
        context_k,
        hidden_j,
        learning_rate,
        max_epochs,
        patience,
        seed,
        init_range,
    };
    config.validate().map_err(|e| {
        SbdError::ModelFormat(format!("model file carries an invalid config: {e}"))
    })?;

    fn parse_bits_block(line: &str, key: &str, expected: usize) -> Result<Vec<f64>, SbdError> {
        let rest = field(line, key)?;
        let values: Result<Vec<f64>, SbdError> = rest
            .split_whitespace()
            .map(|tok| {
                u64::from_str_radix(tok, 16)
                    .map(f64::from_bits)
                    .map_err(|_| {
                        SbdError::ModelFormat(format!("invalid hex weight {tok:?} in {key}"))
                    })
            })
            .collect();
        let values = values?;
        if values.len() != expected {
            return Err(SbdError::ModelFormat(format!(
                "{key} has {} weights, expected {expected}",
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(SbdError::ModelFormat(format!(
                "{key} contains a non-finite weight {bad}"
            )));
        }
        Ok(values)
    }

    let input_dim = config.input_dim();
    let w_ih = parse_bits_block(&next_line("w_ih")?, "w_ih", input_dim * hidden_j)?;
    let b_h = parse_bits_block(&next_line("b_h")?, "b_h", hidden_j)?;
    let w_ho = parse_bits_block(&next_line("w_ho")?, "w_ho", hidden_j)?;
    let b_o = parse_bits_block(&next_line("b_o")?, "b_o", 1)?[0];
    let trailer = next_line("end marker")?;
    if trailer.trim() != "end" {
        return Err(SbdError::ModelFormat(format!(
            "expected `end`, got {trailer:?}"
        )));
    }

    Ok((
        Network {
            w_ih,
            b_h,
            w_ho,
            b_o,
            config,
        },
        ModelMeta {
            tagmap_fingerprint,
            lexicon_identity,
            padding,
            unknown_policy,
        },
    ))
}
