#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace relspan::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::string command;  // check, pullback, cotensor, coherence, relcat, functor, monoid
  std::string path;
  std::string name;
  std::string cospan;
  std::string chain;
  std::string shape;     // triangle | pentagon; inferred from the chain length when empty
  std::string category;
  std::string src;
  std::string tgt;
  std::string map;
  std::string instance;  // finset | coalg; inferred from the entities when empty
  std::string field;     // Q | Fp:<p>; overrides the file
  std::uint64_t seed = kDefaultSeed;
  bool compare_cotensor = false;
  bool json = false;
};

/// Exit code 0 when every check passes, 1 on a failed check, 2 on a usage
/// or parse error (message in err).
struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

Outcome run(const Options& opts);

}  // namespace relspan::cli
