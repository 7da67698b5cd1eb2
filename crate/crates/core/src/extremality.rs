pub fn _placeholder_extremality() {}
