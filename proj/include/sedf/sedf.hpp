#pragma once

#include "sedf/certificate.hpp"
#include "sedf/cyclotomy.hpp"
#include "sedf/edf.hpp"
#include "sedf/error.hpp"
#include "sedf/field.hpp"
#include "sedf/group.hpp"
#include "sedf/numtheory.hpp"
#include "sedf/search.hpp"
