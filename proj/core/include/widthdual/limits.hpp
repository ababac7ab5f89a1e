#pragma once

namespace widthdual {

// Every engine in this library is exponential in the ground-set size. These
// are the default caps; every capped routine also takes its cap as an
// argument so callers (and the CLI's --cap / WIDTHDUAL_CAP) can move them.
inline constexpr int kGroundCap = 16;
inline constexpr int kEnumerationCap = 10;
inline constexpr int kClosureCap = 8;
inline constexpr int kSearchCap = 10;
inline constexpr int kDualisingCap = 4;
inline constexpr int kSetFunctionVerifyCap = 12;

}  // namespace widthdual
