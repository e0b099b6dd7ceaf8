def navigate_and_sort_category(category_id: str, subcategory_id: str | None = None):
   """Navigate to a product category and sort items by price.
  
   Args:
       category_id: ID of the main category link
       subcategory_id: Optional ID of the subcategory link, if needed
  
   Returns:
       None
      
   Examples:
       navigate_and_sort_category('1241', '1873')  # PS4 under Video Games
       navigate_and_sort_category('1245')  # For main category only
   """
   click(category_id)  # Click main category
   if subcategory_id:
       click(subcategory_id)  # Click subcategory if provided
   select_option("1553", "Price")  # Sort by price ascending
