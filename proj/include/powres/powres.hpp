#pragma once

#include "powres/arith.hpp"
#include "powres/certified.hpp"
#include "powres/check_record.hpp"
#include "powres/counting.hpp"
#include "powres/quad_ring.hpp"
#include "powres/report.hpp"
#include "powres/residue.hpp"
#include "powres/sweeps.hpp"
#include "powres/theorem2.hpp"
