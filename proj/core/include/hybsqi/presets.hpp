#ifndef HYBSQI_PRESETS_HPP
#define HYBSQI_PRESETS_HPP

#include <string>
#include <vector>

#include "hybsqi/config.hpp"

namespace hybsqi {

inline constexpr const char* version_string = "1.0.0";

// Executes one configured run and writes solution CSV, optional indicator
// and diagnostics CSVs, and a manifest into cfg.out_dir. Returns 0.
int run_experiment(const RunConfig& cfg);

// Named experiment presets: table2..table7, fig4d, sod, lax, bl, nonconvex.
std::vector<std::string> preset_names();
int run_preset(const std::string& name, const std::string& out_dir);

}  // namespace hybsqi

#endif
