//! Detection toolkit for encrypted Skype-like multimedia traffic.
//!
//! Encrypted real-time traffic carries no readable payload, but its
//! statistical shape survives: small packets at short, regular
//! inter-arrival times. This crate turns that observation into a
//! working detection pipeline:
//!
//! 1. [`flow`] reads pcap captures, assembles bidirectional flows and
//!    summarizes each flow into a nine-attribute feature vector
//!    (protocol plus length/IAT mean, std, min, max).
//! 2. [`classify`] trains three independent classifiers on labeled
//!    feature vectors: a decision tree (information-gain splits), a
//!    logistic model (gradient-ascent likelihood fit) and a Bayesian
//!    network (K2 structure search, max 3 parents per node).
//! 3. [`vote`] fuses the three posteriors with a hardened majority
//!    vote and produces both a label and a ranking score.
//! 4. [`metrics`] computes TP/FP rates, MAE/RMSE, ROC curves and AUC,
//!    and calibrates the detection threshold from the ensemble's AUC.
//! 5. [`trigger`] is a minimal IDS that spots the clear-text Skype
//!    login signatures and raises a syslog trigger.
//! 6. [`probe`] is the detection probe proper: it registers with the
//!    SIEM over TCP, watches activated hosts in tumbling windows and
//!    reports windows whose Skype-flow fraction exceeds the threshold.
//! 7. [`siem`] is the miniature SIEM: syslog normalization through the
//!    agent regex, correlation directives, risk-scored alarms, an
//!    append-only store and the probe control channel.
//!
//! The [`sim`] module replays the whole chain deterministically
//! in-process from a scenario script; the `eskypro` binary exposes
//! every stage as a subcommand. Each major capability also has a
//! runnable example under `examples/`.

pub mod classify;
pub mod cli;
pub mod dataset;
pub mod flow;
pub mod logfmt;
pub mod metrics;
pub mod probe;
pub mod siem;
pub mod sim;
pub mod synth;
pub mod trigger;
pub mod vote;
