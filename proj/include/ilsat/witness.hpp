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

// Countermodel extraction from an accepting decision trace.
//
// A check_mcs node becomes one world w whose valuation is read off the
// maximal consistent set.  Each of its refutations contributes a component:
// the check-(a) model E, and one model G_theta per theta, disjointly united.
// w sees every world of every component, and S_w relates all pairs of
// worlds inside the same component.  This is the root merge of the
// per-zeta refutation models, each of which is a fresh root over its
// component with the full relation as S.

#ifndef ILSAT_WITNESS_HPP
#define ILSAT_WITNESS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ilsat/closure.hpp"
#include "ilsat/decide.hpp"
#include "ilsat/semantics.hpp"

namespace ilsat {

class MalformedTrace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// World names are trace paths: "w" for the root, then ".z<k>.a" for the
// check-(a) root of the refutation of gamma_rhd_i[k] and ".z<k>.b<t>" for the
// check-(b) root of theta = gamma_pure[t].
VeltmanModel build_from_trace(const SatSetNode& trace, const ClosureSets& closure);

// The standalone model of one refutation: a fresh root (all variables
// false) over the check-(a) and check-(b) components.
VeltmanModel build_refutation_model(const RefuteNode& node, const ClosureSets& closure);

struct CertifyReport {
  bool ok = false;
  std::vector<std::string> problems;
};

// Frame conditions, then forcing of `delta` at the root.
CertifyReport certify(const VeltmanModel& model, const Formula& delta);

}  // namespace ilsat

#endif  // ILSAT_WITNESS_HPP
