#pragma once

namespace fuscat {

// Entry point behind the fuscat binary. Exit codes: 0 verdict true / entity
// valid, 1 verdict false / violations found, 2 usage or data errors.
int run_cli(int argc, const char* const* argv);

}  // namespace fuscat
