/* Copyright 2026 The ilsat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ilsat/witness.hpp"

namespace ilsat {

namespace {

class Builder {
 public:
  explicit Builder(const ClosureSets& closure) : closure_(closure) {}

  World sat_node(const SatSetNode& node, const std::string& path) { return mcs_node(node.chosen, path); }

  World mcs_node(const CheckMcsNode& node, const std::string& path) {
    if (node.mcs.size() != closure_.gamma_pure.size()) throw MalformedTrace("maximal set has the wrong universe");
    if (node.refutations.size() != node.split.minus.size())
      throw MalformedTrace("check_mcs node does not refute every negative |> formula");
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < closure_.gamma_pure.size(); ++i)
      if (closure_.shape[i].kind == Kind::Atom && node.mcs.positive(i)) atoms.push_back(closure_.gamma_pure[i].name());
    const World w = model_.add_world(path, std::move(atoms));
    for (const RefuteNode& r : node.refutations) attach_refutation(r, w, path + ".z" + std::to_string(r.zeta));
    return w;
  }

  // Builds the components of `node` and hangs them below `root`.
  void attach_refutation(const RefuteNode& node, World root, const std::string& path) {
    if (!node.check_a) throw MalformedTrace("refutation without check (a) trace");
    if (node.check_b.size() != node.pair.theta.size())
      throw MalformedTrace("refutation needs one check (b) trace per theta");
    const World begin = model_.size();
    sat_node(*node.check_a, path + ".a");
    for (std::size_t i = 0; i < node.check_b.size(); ++i) {
      const auto& [theta, trace] = node.check_b[i];
      if (!trace || theta != node.pair.theta[i]) throw MalformedTrace("check (b) trace does not match Theta");
      sat_node(*trace, path + ".b" + std::to_string(theta));
    }
    const World end = model_.size();
    for (World u = begin; u < end; ++u) {
      model_.add_r(root, u);
      for (World v = begin; v < end; ++v) model_.add_s(root, u, v);
    }
  }

  VeltmanModel finish(World root) {
    model_.root = root;
    model_.normalize();
    return std::move(model_);
  }

  VeltmanModel& model() { return model_; }

 private:
  const ClosureSets& closure_;
  VeltmanModel model_;
};

}  // namespace

VeltmanModel build_from_trace(const SatSetNode& trace, const ClosureSets& closure) {
  Builder b(closure);
  const World root = b.sat_node(trace, "w");
  return b.finish(root);
}

VeltmanModel build_refutation_model(const RefuteNode& node, const ClosureSets& closure) {
  Builder b(closure);
  const World root = b.model().add_world("h");
  b.attach_refutation(node, root, "h.z" + std::to_string(node.zeta));
  return b.finish(root);
}

CertifyReport certify(const VeltmanModel& model, const Formula& delta) {
  CertifyReport report;
  for (const FrameViolation& v : frame_check(model)) report.problems.push_back(describe(v, model));
  if (!model.root) {
    report.problems.push_back("model has no root");
  } else if (report.problems.empty() && !model_check(model, *model.root, delta)) {
    report.problems.push_back("root " + model.name(*model.root) + " does not force " + to_string(delta));
  }
  report.ok = report.problems.empty();
  return report;
}

}  // namespace ilsat
