//! Operator forwarding for the exact field element types.

/// Given `impl Op<&T> for &T`, derive the owned and mixed forms.
macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl<'a> std::ops::$tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}

macro_rules! forward_all {
    ($t:ty) => {
        $crate::ops::forward_binop!($t, Add, add);
        $crate::ops::forward_binop!($t, Sub, sub);
        $crate::ops::forward_binop!($t, Mul, mul);
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl std::ops::AddAssign<&$t> for $t {
            fn add_assign(&mut self, rhs: &$t) {
                *self = &*self + rhs;
            }
        }
        impl std::ops::SubAssign<&$t> for $t {
            fn sub_assign(&mut self, rhs: &$t) {
                *self = &*self - rhs;
            }
        }
        impl std::ops::MulAssign<&$t> for $t {
            fn mul_assign(&mut self, rhs: &$t) {
                *self = &*self * rhs;
            }
        }
    };
}

pub(crate) use forward_all;
pub(crate) use forward_binop;
