// Copyright 2026 The compnet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPNET_REPORT_HPP_
#define COMPNET_REPORT_HPP_

#include <string>
#include <vector>

#include "compnet/cuts.hpp"
#include "compnet/flow.hpp"
#include "compnet/interdiction.hpp"
#include "compnet/network.hpp"

namespace compnet {

// Fixed notation, six decimals, classic locale.
std::string format_number(double value);

// JSON documents (two-space indent). Every document carries a "kind" key.
std::string flow_to_json(const ComputingNetwork& net, NodeIndex source,
                         const FlowSolution& flow, bool with_paths,
                         bool with_duals);
std::string cut_to_json(const ComputingNetwork& net, const CutSolution& cut,
                        bool verified);
std::string interdiction_to_json(const ComputingNetwork& net,
                                 const InterdictionSolution& sol,
                                 double budget, InterdictionMethod method,
                                 bool partial);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace compnet

#endif  // COMPNET_REPORT_HPP_
