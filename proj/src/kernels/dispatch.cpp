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

#include "ttnrep/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "ttnrep/errors.hpp"

namespace ttnrep::kernels {
namespace {

Backend detect() {
    if (const char *env = std::getenv("TTNREP_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::kAvx2;
#endif
#if defined(__aarch64__)
        if (std::strcmp(env, "neon") == 0) return Backend::kNeon;
#endif
        return Backend::kScalar;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return Backend::kAvx2;
#endif
#if defined(__aarch64__)
    return Backend::kNeon;
#endif
    return Backend::kScalar;
}

Backend &current() {
    static Backend b = detect();
    return b;
}

const KernelTable &table_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::kAvx2:
        return avx2_table;
#endif
#if defined(__aarch64__)
    case Backend::kNeon:
        return neon_table;
#endif
    default:
        return scalar_table;
    }
}

} // namespace

const KernelTable &active() { return table_for(current()); }

Backend active_backend() { return current(); }

void set_backend(Backend b) {
    switch (b) {
    case Backend::kScalar:
        break;
    case Backend::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
        if (!avx2_available()) throw PreconditionError("AVX2 not supported on this CPU");
        break;
#else
        throw PreconditionError("AVX2 backend not compiled in");
#endif
    case Backend::kNeon:
#if defined(__aarch64__)
        break;
#else
        throw PreconditionError("NEON backend not compiled in");
#endif
    }
    current() = b;
}

std::string backend_name() {
    switch (current()) {
    case Backend::kAvx2:
        return "avx2";
    case Backend::kNeon:
        return "neon";
    default:
        return "scalar";
    }
}

} // namespace ttnrep::kernels
