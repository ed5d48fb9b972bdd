#pragma once

namespace nct {

/// Number of worker threads to use: a positive request passes through,
/// 0 picks the OpenMP default (1 in builds without OpenMP).
int resolve_threads(int requested);

}  // namespace nct
