#pragma once

namespace readorder::cli {

// Subcommands: order | eval | render | bench | synth.
// Exit codes: 0 success, 1 data error, 2 usage error.
int run(int argc, const char* const* argv);

} // namespace readorder::cli
