#pragma once

namespace eqbif {

// Selects between the OpenMP kernel and its serial reference.
enum class Exec { Serial, Parallel };

int max_threads();

} // namespace eqbif
