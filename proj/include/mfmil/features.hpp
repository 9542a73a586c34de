#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>

#include "mfmil/histogram.hpp"

namespace mfmil {

class Dataset;

using FeatureVector = Eigen::VectorXf;
// Non-owning view over a feature row in the store.
using FeatureView = Eigen::Map<const Eigen::VectorXf>;

// Descriptor channel composition, Table-1 style: foreground only (F),
// foreground + background (F+B), foreground + contrastive background (F+C).
enum class ChannelMode { ForegroundOnly, ForegroundPlusBackground, ForegroundPlusContrastive };

const char* to_string(ChannelMode m);
std::optional<ChannelMode> channel_mode_from_string(const std::string& s);

// Composed descriptor length for given block dims.
Eigen::Index composed_dim(Eigen::Index fg_dim, Eigen::Index bg_dim, ChannelMode mode);

// Unit-norm copy; vectors with norm below 1e-12 are returned unchanged.
FeatureVector l2_normalize(const FeatureVector& v);

// Contrastive background descriptor x_b - x_f. Anti-symmetric in its
// arguments. Throws on dimension mismatch.
FeatureVector contrastive(const FeatureVector& background, const FeatureVector& foreground);

// Assembles the training descriptor for one window. In F+C mode the
// foreground block itself plays the role of the un-gridded foreground
// descriptor the background is contrasted against, so the second block is
// bg - fg and both blocks must have equal dims.
FeatureVector compose(const FeatureVector& fg, const FeatureVector* bg, ChannelMode mode);

enum class PairMode { AllPairs, WithinImage };

// Diagnostic for descriptor near-orthogonality: samples window descriptors,
// shifts each to zero mean and unit norm, and histograms pairwise inner
// products over [-1, 1].
Histogram inner_product_histogram(const Dataset& dataset, PairMode pair_mode,
                                  std::size_t sample_size, std::size_t bins,
                                  std::uint64_t seed, ChannelMode mode = ChannelMode::ForegroundOnly);

}  // namespace mfmil
