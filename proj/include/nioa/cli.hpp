#pragma once

#include <string>
#include <vector>

namespace nioa {

// The bench command line: `bench run --config <file>`,
// `bench compare --primary <alg> --store <dir> [--pool both|primary]`,
// `bench report --store <dir>`. Returns the process exit code (0 on success,
// nonzero with a message on stderr otherwise). args excludes the program name.
int bench_main(const std::vector<std::string>& args);

} // namespace nioa
