#pragma once

namespace fri::cli {

// Stable process exit codes, one per failure class.
enum ExitCode {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitDimension = 3,
    kExitMethod = 4,
    kExitIo = 5,
};

} // namespace fri::cli
