# Table file reader and placeholder instantiation
