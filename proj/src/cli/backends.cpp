#include "vafilt/cli/backends.hpp"

#include "vafilt/module/fock_module.hpp"
#include "vafilt/module/table_file.hpp"
#include "vafilt/va/heisenberg.hpp"

namespace vafilt {

namespace {

// Room above the run cutoff for the iterate expansions of the mode grid.
constexpr int kAlgebraFloor = 8;
constexpr long kModuleFloorTicks = 44;

long cutoff_ticks(const std::string& text, int period) {
  Rational q;
  try {
    q = Rational::parse(text);
  } catch (const Error& e) {
    throw ConfigError("cutoff '" + text + "' is not a rational p/q: " + e.what());
  }
  Rational t = q * Rational(period);
  if (q.sign() < 0 || !t.is_integer())
    throw ConfigError("cutoff " + q.str() + " must be a nonnegative multiple of 1/" +
                      std::to_string(period));
  return t.floor();
}

}  // namespace

Backend make_backend(const std::string& id, const std::string& cutoff) {
  Backend b;
  b.id = id;
  if (id == "heisenberg-T2" || id == "heisenberg-T1") {
    const int T = id.back() - '0';
    const long ticks = cutoff_ticks(cutoff, T);
    b.v_cutoff = static_cast<int>(ticks / T);
    b.w_cutoff_ticks = ticks;
    auto va = std::make_unique<Heisenberg>(T, std::max(kAlgebraFloor, b.v_cutoff + 1));
    b.module = std::make_unique<FockModule>(*va, std::max(kModuleFloorTicks, ticks));
    b.algebra = std::move(va);
    return b;
  }
  if (id.rfind("table:", 0) == 0) {
    LoadedTable t = load_table_file(id.substr(6));
    const int T = t.algebra->period();
    const long ticks = cutoff_ticks(cutoff, T);
    b.v_cutoff = static_cast<int>(ticks / T);
    b.w_cutoff_ticks = ticks;
    if (b.v_cutoff > t.algebra->cutoff())
      throw InsufficientCutoff("cutoff " + cutoff + " exceeds the table's algebra cutoff " +
                               std::to_string(t.algebra->cutoff()) + "; lower --cutoff");
    if (t.module && ticks > t.module->cutoff_ticks())
      throw InsufficientCutoff("cutoff " + cutoff + " exceeds the table's module cutoff " +
                               ticks_str(t.module->cutoff_ticks(), T) + "; lower --cutoff");
    b.module = std::move(t.module);
    b.algebra = std::move(t.algebra);
    return b;
  }
  throw ConfigError("unknown backend '" + id + "' (expected heisenberg-T2, heisenberg-T1 or table:<path>)");
}

}  // namespace vafilt
