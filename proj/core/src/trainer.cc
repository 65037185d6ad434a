// Copyright 2026 The snnaccel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snnaccel/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "snnaccel/errors.h"
#include "snnaccel/parallel.h"
#include "snnaccel/reference.h"

namespace snnaccel {

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

struct SparseInput {
  std::vector<std::uint32_t> index;
  std::vector<float> value;
};

// Class-major prototype matrix: row c holds the weights of class c.
class Prototypes {
 public:
  Prototypes(std::uint32_t classes, std::uint32_t dim)
      : classes_(classes), dim_(dim), w_(static_cast<std::size_t>(classes) * dim) {}

  float* row(std::uint32_t c) { return w_.data() + static_cast<std::size_t>(c) * dim_; }
  const float* row(std::uint32_t c) const {
    return w_.data() + static_cast<std::size_t>(c) * dim_;
  }
  std::uint32_t classes() const { return classes_; }
  std::uint32_t dim() const { return dim_; }

 private:
  std::uint32_t classes_;
  std::uint32_t dim_;
  std::vector<float> w_;
};

void Shuffle(std::vector<std::size_t>& order, std::uint64_t& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = SplitMix64(rng) % i;
    std::swap(order[i - 1], order[j]);
  }
}

// One epoch of mini-batch softmax regression.
void SgdEpoch(Prototypes& w, const std::vector<SparseInput>& xs,
              std::span<const std::uint8_t> labels, std::uint32_t batch_size,
              double lr, std::uint64_t& rng) {
  const std::uint32_t classes = w.classes();
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Shuffle(order, rng);

  std::vector<double> grad(static_cast<std::size_t>(classes) * w.dim(), 0.0);
  std::vector<double> z(classes);
  for (std::size_t begin = 0; begin < order.size(); begin += batch_size) {
    const std::size_t end = std::min(order.size(), begin + batch_size);
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t b = begin; b < end; ++b) {
      const SparseInput& x = xs[order[b]];
      for (std::uint32_t c = 0; c < classes; ++c) {
        const float* row = w.row(c);
        double acc = 0.0;
        for (std::size_t k = 0; k < x.index.size(); ++k) acc += row[x.index[k]] * x.value[k];
        z[c] = acc;
      }
      const double zmax = *std::max_element(z.begin(), z.end());
      double total = 0.0;
      for (double& v : z) total += (v = std::exp(v - zmax));
      for (std::uint32_t c = 0; c < classes; ++c) {
        const double g = z[c] / total - (c == labels[order[b]] ? 1.0 : 0.0);
        double* grow = grad.data() + static_cast<std::size_t>(c) * w.dim();
        for (std::size_t k = 0; k < x.index.size(); ++k) grow[x.index[k]] += g * x.value[k];
      }
    }
    const double step = lr / static_cast<double>(end - begin);
    for (std::uint32_t c = 0; c < classes; ++c) {
      float* row = w.row(c);
      const double* grow = grad.data() + static_cast<std::size_t>(c) * w.dim();
      for (std::uint32_t j = 0; j < w.dim(); ++j) row[j] -= static_cast<float>(step * grow[j]);
    }
  }
}

// Mean over the training set of the true-class prototype's potential once
// every active input has spiked.
double MeanPositivePotential(const Prototypes& w, const Dataset& train) {
  double sum = 0.0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const float* row = w.row(train.labels[i]);
    const auto image = train.image(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < image.size(); ++j) {
      if (image[j] > 0) acc += row[j];
    }
    sum += acc;
  }
  return sum / static_cast<double>(train.size());
}

NetworkSpec Replicate(const Prototypes& w, const Dataset& train,
                      const TrainerOptions& opt) {
  const double m = MeanPositivePotential(w, train);
  if (!std::isfinite(m) || m <= 0.0) {
    throw TrainingError("training inputs never drive the true-class prototype "
                        "positive (mean potential " + std::to_string(m) + ")");
  }
  const std::uint32_t group = opt.out_dim / opt.num_classes;
  const std::uint32_t dim = w.dim();
  std::vector<float> weights(static_cast<std::size_t>(opt.out_dim) * dim);
  std::vector<double> thresholds(opt.out_dim);
  std::uint64_t rng = opt.seed ^ 0x6A09E667F3BCC909ull;
  for (std::uint32_t c = 0; c < opt.num_classes; ++c) {
    for (std::uint32_t k = 0; k < group; ++k) {
      const std::uint32_t n = c * group + k;
      float* out = weights.data() + static_cast<std::size_t>(n) * dim;
      for (std::uint32_t j = 0; j < dim; ++j) {
        const double u = static_cast<double>(SplitMix64(rng) >> 11) * 0x1.0p-53;
        out[j] = static_cast<float>(w.row(c)[j] * (1.0 + opt.jitter * (2.0 * u - 1.0)));
      }
      const double rung =
          group == 1 ? 0.5 * (opt.ladder_low + opt.ladder_high)
                     : opt.ladder_low + (opt.ladder_high - opt.ladder_low) * k / (group - 1);
      thresholds[n] = rung * m;
    }
  }
  NeuronConfig neurons;
  neurons.thresholds = std::move(thresholds);
  return BuildSequential({LayerSpec::Linear(dim, opt.out_dim, std::move(weights)),
                          LayerSpec::Lif(opt.out_dim)},
                         std::move(neurons), opt.encoder);
}

void CheckInputs(const Dataset& train, const TrainerOptions& opt) {
  if (train.size() == 0 || train.image_size() == 0) {
    throw TrainingError("empty training set");
  }
  if (opt.num_classes < 2) throw TrainingError("need at least two classes");
  if (opt.out_dim == 0 || opt.out_dim % opt.num_classes != 0) {
    throw TrainingError("out_dim " + std::to_string(opt.out_dim) +
                        " is not a positive multiple of num_classes " +
                        std::to_string(opt.num_classes));
  }
  if (train.pixels.size() != train.size() * train.image_size()) {
    throw TrainingError("pixel buffer does not match label count");
  }
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (train.labels[i] >= opt.num_classes) {
      throw TrainingError("label " + std::to_string(train.labels[i]) + " at index " +
                          std::to_string(i) + " is outside [0, " +
                          std::to_string(opt.num_classes) + ")");
    }
  }
  if (opt.batch_size == 0 || !(opt.learning_rate > 0.0)) {
    throw TrainingError("batch size and learning rate must be positive");
  }
  if (!(opt.ladder_low > 0.0) || !(opt.ladder_high >= opt.ladder_low)) {
    throw TrainingError("threshold ladder must satisfy 0 < low <= high");
  }
}

}  // namespace

NetworkSpec TrainLinearTtfs(const Dataset& train, const TrainerOptions& opt) {
  CheckInputs(train, opt);
  const auto dim = static_cast<std::uint32_t>(train.image_size());
  const double scale = 1.0 / opt.encoder.intensity_max;

  std::vector<SparseInput> graded(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto image = train.image(i);
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (image[j] == 0) continue;
      graded[i].index.push_back(j);
      graded[i].value.push_back(static_cast<float>(image[j] * scale));
    }
  }

  Prototypes w(opt.num_classes, dim);
  std::uint64_t rng = opt.seed;
  for (std::uint32_t e = 0; e < opt.base_epochs; ++e) {
    SgdEpoch(w, graded, train.labels, opt.batch_size, opt.learning_rate, rng);
  }

  ExportOptions export_options;
  export_options.num_classes = opt.num_classes;
  std::vector<SparseInput> snapshots(train.size());
  for (std::uint32_t r = 0; r < opt.refine_rounds; ++r) {
    const DeploymentArtifact artifact = Export(Replicate(w, train, opt), export_options);
    ParallelFor(train.size(), opt.jobs, [&](std::size_t i) {
      const std::vector<SpikeEvent> events = EncodeTtfs(train.image(i), opt.encoder);
      const InferenceResult result = RunTtfsReference(artifact, events);
      std::uint32_t decision = opt.encoder.time_window - 1;
      for (const auto& t : result.class_first_spikes) {
        if (t) decision = std::min(decision, *t);
      }
      SparseInput& x = snapshots[i];
      x.index.clear();
      x.value.clear();
      for (const SpikeEvent& ev : events) {
        if (ev.time > decision) break;
        x.index.push_back(ev.neuron);
        x.value.push_back(1.0f);
      }
    });
    SgdEpoch(w, snapshots, train.labels, opt.batch_size, opt.learning_rate / (1.0 + r),
             rng);
  }
  return Replicate(w, train, opt);
}

}  // namespace snnaccel
