#include <cstdlib>
#include <cstring>

#include "riemwave/kernels.hpp"
#include "variants.hpp"

namespace riemwave::kernels {

namespace {

bool cpu_has(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(RIEMWAVE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(RIEMWAVE_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select() noexcept {
  if (const char* env = std::getenv("RIEMWAVE_KERNELS")) {
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (std::strcmp(env, to_string(isa)) == 0) {
        if (const KernelTable* t = table_for(isa)) {
          return *t;
        }
      }
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (const KernelTable* t = table_for(isa)) {
      return *t;
    }
  }
  return scalar_table();
}

}  // namespace

const KernelTable* table_for(Isa isa) noexcept {
  if (!cpu_has(isa)) {
    return nullptr;
  }
  switch (isa) {
    case Isa::Scalar:
      return &scalar_table();
    case Isa::Avx2:
#if defined(RIEMWAVE_HAVE_AVX2)
      return &detail::avx2_table();
#else
      return nullptr;
#endif
    case Isa::Neon:
#if defined(RIEMWAVE_HAVE_NEON)
      return &detail::neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (table_for(isa) != nullptr) {
      out.push_back(isa);
    }
  }
  return out;
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace riemwave::kernels
