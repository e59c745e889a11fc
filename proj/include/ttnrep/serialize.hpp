// Copyright 2026 the ttnrep authors
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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ttnrep/diagnostics.hpp"
#include "ttnrep/dyadic.hpp"
#include "ttnrep/ensembles.hpp"
#include "ttnrep/linalg.hpp"
#include "ttnrep/thompson.hpp"
#include "ttnrep/ttn.hpp"

namespace ttnrep {

using json = nlohmann::ordered_json;

/// Provenance block embedded in every output file. Two runs with identical
/// manifests produce byte-identical numerical output.
struct RunManifest {
    std::vector<std::string> command;
    json config = json::object();
    std::string version;
    std::string timestamp;
    std::vector<std::uint64_t> seeds;
};

json to_json(const RunManifest &m);

// Matrices and vectors serialize entries as [re, im] pairs.
json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

json state_to_json(const StateVector &v);
StateVector state_from_json(const json &j);

json isometry_to_json(const Isometry &v);
Isometry isometry_from_json(const json &j);

/// Partitions serialize as the list of interior breakpoints "p/2^n".
json partition_to_json(const DyadicPartition &p);
DyadicPartition partition_from_json(const json &j);

json element_to_json(const ThompsonElement &f);
ThompsonElement element_from_json(const json &j);

json scale_state_to_json(const ScaleState &s);
ScaleState scale_state_from_json(const json &j);

json report_to_json(const DiagnosticsReport &r);

// CSV emitters. Each starts with a "# manifest ..." comment line followed by
// a header row; numbers use round-trippable formatting.
std::string decay_csv(const DiagnosticsReport &r, const RunManifest &manifest);
std::string melement_csv(const std::vector<std::uint32_t> &ks, const std::vector<cplx> &transfer,
                         const std::vector<cplx> &direct, const std::vector<double> &bounds,
                         const std::string &mode, const RunManifest &manifest);
std::string scan_csv(const std::vector<DiagnosticsReport> &reports, const RunManifest &manifest);

} // namespace ttnrep
