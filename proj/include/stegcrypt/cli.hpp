#pragma once

namespace stegcrypt::cli {

/// Entry point behind the stegcrypt binary.
/// Exit codes: 0 success, 1 usage error, 2 domain or data error.
int run(int argc, const char* const* argv);

} // namespace stegcrypt::cli
