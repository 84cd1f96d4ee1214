#pragma once

#include "quasiham/audit.hpp"
#include "quasiham/cayley_table.hpp"
#include "quasiham/concepts.hpp"
#include "quasiham/equivalence.hpp"
#include "quasiham/error.hpp"
#include "quasiham/finvec.hpp"
#include "quasiham/galois_field.hpp"
#include "quasiham/hamming.hpp"
#include "quasiham/isotope.hpp"
#include "quasiham/linear_solve.hpp"
#include "quasiham/prime_field.hpp"
#include "quasiham/quaternion.hpp"
#include "quasiham/rational.hpp"
#include "quasiham/rationals.hpp"
#include "quasiham/reconstruct.hpp"
#include "quasiham/subfield.hpp"
