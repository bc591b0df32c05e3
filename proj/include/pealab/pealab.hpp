#pragma once

// Finite-model workbench for pseudo equality algebras and their companion
// structures: axiom checking, derived implications, the translation to
// and from pseudo BCK-meet-semilattices, deductive systems, congruences
// and quotients, pseudo hoop constructions, and exhaustive small-model
// search with counterexample hunting.

#include "pealab/algebra.hpp"
#include "pealab/bck.hpp"
#include "pealab/congruence.hpp"
#include "pealab/core.hpp"
#include "pealab/deduction.hpp"
#include "pealab/derived.hpp"
#include "pealab/enumerate.hpp"
#include "pealab/hoop.hpp"
#include "pealab/io.hpp"
