"""Fan-out helpers package"""
