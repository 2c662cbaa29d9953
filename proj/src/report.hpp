// Copyright 2026 The icx Authors
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

// JSON views of the core result types, shared by the C API.

#ifndef ICX_SRC_REPORT_HPP_
#define ICX_SRC_REPORT_HPP_

#include <json.hpp>

#include "icx/analysis.hpp"
#include "icx/defect_lab.hpp"
#include "icx/digit_bounds.hpp"
#include "icx/synthesizer.hpp"

namespace icx::report {

using Json = nlohmann::ordered_json;

Json to_json(const DefectRecord& r);
Json to_json(const CensusMatrix& c);
Json to_json(const Check& c);
Json to_json(const VerificationReport& r);
Json to_json(const ConstantSystemReport& r, const std::vector<std::uint64_t>& thresholds);
Json to_json(const DigitBoundTable& t);
Json to_json(const SynthesisResult& r);
Json to_json(const ParamChoice& p);
Json to_json(const RatioPoint& p);
Json to_json(const DensityScan& s);
Json to_json(const GrowthScan& s);
Json to_json(const ConjectureReport& r);
Json discrepancy_json(const PointSet& s);

}  // namespace icx::report

#endif  // ICX_SRC_REPORT_HPP_
