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

#include "ttnrep/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "ttnrep/errors.hpp"

namespace ttnrep {
namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) throw PreconditionError("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

json to_json(const RunManifest &m) {
    json j = json::object();
    j["command"] = m.command;
    j["config"] = m.config;
    j["version"] = m.version;
    j["timestamp"] = m.timestamp;
    j["seeds"] = m.seeds;
    return j;
}

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) throw PreconditionError("matrix JSON must be a nested array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw PreconditionError("matrix JSON rows differ in length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

json state_to_json(const StateVector &v) {
    json amps = json::array();
    for (const cplx &z : v.amplitudes) amps.push_back(complex_to_json(z));
    return amps;
}

StateVector state_from_json(const json &j) {
    if (!j.is_array()) throw PreconditionError("state JSON must be a list of [re, im] pairs");
    StateVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v.amplitudes[i] = complex_from_json(j[i]);
    return v;
}

json isometry_to_json(const Isometry &v) {
    json j = json::object();
    j["d"] = v.d();
    j["matrix"] = matrix_to_json(v.matrix());
    return j;
}

Isometry isometry_from_json(const json &j) {
    if (!j.contains("d") || !j.contains("matrix")) {
        throw PreconditionError("isometry JSON needs fields d and matrix");
    }
    return Isometry::from_matrix(j["d"].get<std::size_t>(), matrix_from_json(j["matrix"]));
}

json partition_to_json(const DyadicPartition &p) {
    json j = json::array();
    for (const auto &b : p.breakpoints()) j.push_back(b.to_string());
    return j;
}

DyadicPartition partition_from_json(const json &j) {
    if (!j.is_array()) throw PreconditionError("partition JSON must be a list of breakpoints");
    std::vector<DyadicRational> pts;
    for (const auto &e : j) {
        auto r = DyadicRational::parse(e.get<std::string>());
        if (!r) throw PreconditionError("breakpoint is not a dyadic rational: " + e.dump());
        pts.push_back(*r);
    }
    return DyadicPartition::from_breakpoints(pts);
}

json element_to_json(const ThompsonElement &f) {
    json j = json::object();
    j["domain"] = partition_to_json(f.domain());
    j["range"] = partition_to_json(f.range());
    j["offset"] = f.offset();
    return j;
}

ThompsonElement element_from_json(const json &j) {
    if (!j.contains("domain") || !j.contains("range") || !j.contains("offset")) {
        throw PreconditionError("element JSON needs fields domain, range, offset");
    }
    return ThompsonElement::from_parts(partition_from_json(j["domain"]),
                                       partition_from_json(j["range"]),
                                       j["offset"].get<std::size_t>());
}

json scale_state_to_json(const ScaleState &s) {
    json j = json::object();
    j["d"] = s.d;
    j["partition"] = partition_to_json(s.partition);
    j["amplitudes"] = state_to_json(s.vector);
    return j;
}

ScaleState scale_state_from_json(const json &j) {
    if (!j.contains("d") || !j.contains("partition") || !j.contains("amplitudes")) {
        throw PreconditionError("state JSON needs fields d, partition, amplitudes");
    }
    return ScaleState(j["d"].get<std::size_t>(), partition_from_json(j["partition"]),
                      state_from_json(j["amplitudes"]));
}

json report_to_json(const DiagnosticsReport &r) {
    json j = json::object();
    j["d"] = r.d;
    j["source"] = r.source;
    j["norm_x"] = r.norm_x;
    j["norm_cross"] = r.norm_cross;
    j["norm_gamma"] = r.norm_gamma;
    j["intersection_dim"] = r.intersection_dim;
    j["genericity_det"] = r.genericity_det;
    j["condition_holds"] = r.condition_holds;
    j["certificate"] = r.certificate;
    j["margin"] = r.margin;
    json decay = json::array();
    for (std::size_t k = 0; k < r.decay_series.size(); ++k) {
        decay.push_back(json::array({k, r.decay_series[k]}));
    }
    j["decay_series"] = std::move(decay);
    j["underflow_from"] = r.underflow_from;
    json mel = json::array();
    for (std::size_t i = 0; i < r.melement_series.size(); ++i) {
        const cplx z = r.melement_series[i];
        mel.push_back(json::array({i + 1, z.real(), z.imag()}));
    }
    j["melement_series"] = std::move(mel);
    return j;
}

std::string decay_csv(const DiagnosticsReport &r, const RunManifest &manifest) {
    std::ostringstream os;
    os << "# manifest " << to_json(manifest).dump() << "\n";
    os << "k,norm,bound\n";
    double bound = r.norm_x;
    for (std::size_t k = 0; k < r.decay_series.size(); ++k) {
        if (k > 0) bound *= bound;
        os << k << "," << fmt(r.decay_series[k]) << "," << fmt(bound) << "\n";
    }
    return os.str();
}

std::string melement_csv(const std::vector<std::uint32_t> &ks, const std::vector<cplx> &transfer,
                         const std::vector<cplx> &direct, const std::vector<double> &bounds,
                         const std::string &mode, const RunManifest &manifest) {
    std::ostringstream os;
    os << "# manifest " << to_json(manifest).dump() << "\n";
    const bool both = mode == "both";
    const std::vector<cplx> &primary = mode == "direct" ? direct : transfer;
    os << "k,re,im,abs,hoelder_bound";
    if (both) os << ",re_direct,im_direct,abs_diff";
    os << "\n";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const cplx z = primary[i];
        os << ks[i] << "," << fmt(z.real()) << "," << fmt(z.imag()) << "," << fmt(std::abs(z))
           << "," << fmt(bounds[i]);
        if (both) {
            const cplx w = direct[i];
            os << "," << fmt(w.real()) << "," << fmt(w.imag()) << "," << fmt(std::abs(z - w));
        }
        os << "\n";
    }
    return os.str();
}

std::string scan_csv(const std::vector<DiagnosticsReport> &reports, const RunManifest &manifest) {
    std::ostringstream os;
    os << "# manifest " << to_json(manifest).dump() << "\n";
    os << "seed,norm_x,norm_gamma,genericity_det,condition_holds,margin\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto &r = reports[i];
        if (i < manifest.seeds.size()) {
            os << manifest.seeds[i];
        } else {
            os << r.source;
        }
        os << "," << fmt(r.norm_x) << "," << fmt(r.norm_gamma) << "," << fmt(r.genericity_det)
           << "," << (r.condition_holds ? 1 : 0) << "," << fmt(r.margin) << "\n";
    }
    return os.str();
}

} // namespace ttnrep
