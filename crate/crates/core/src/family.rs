pub fn _placeholder_family() {}
