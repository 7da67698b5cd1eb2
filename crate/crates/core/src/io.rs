pub fn _placeholder_io() {}
