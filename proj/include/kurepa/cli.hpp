#pragma once

namespace kurepa {

// Exit codes: 0 pass, 1 verification failure, 2 capacity, 3 malformed input.
int run_cli(int argc, char** argv);

}  // namespace kurepa
